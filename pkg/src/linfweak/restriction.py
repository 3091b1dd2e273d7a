"""Restriction of finitely additive functionals to C_0: the hat measure.

A purely finitely additive 0-1 measure is represented constructively by a
nested base of positive-measure interval sets B_1 >= B_2 >= ...; the measure
takes the value 1 on every B_l, and a set query is answered only when the
base forces it:

    one           some B_l is contained in the set up to a null set
    zero          some B_l meets the set in a null set
    undetermined  neither, for ANY l (certified symbolically)

Base endpoints are affine in l and 1/l, so all order relations between
endpoints stabilize beyond a computable index and the tail measures of
B_l \\ E and B_l n E are exact functions a + b/l + c*l, determined by
interpolation and consistency checks.  That makes the three-valued query
total: 'undetermined' is a theorem about every l, not a budget artifact.

The Borel measure representing the restriction to C_0(X) is computed from
the forced answers alone (so it is the same for every extension of the
base): an atom whose base shrinks to a point of X contributes a Dirac mass
there; an atom escaping every compact (through a lost boundary point or to
infinity) contributes nothing; the sigma-additive density passes through.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .piecewise import PiecewiseFn
from .sets import (Domain, Interval, IntervalSet, NEG_INF, POS_INF,
                   SetAlgebraError, is_finite, ivl, rat)

ONE = "one"
ZERO = "zero"
UNDETERMINED = "undetermined"


class UnsupportedOracleError(ValueError):
    """The base's accumulation structure is outside the resolvable class;
    raised instead of ever returning a wrong answer."""


class OracleConsistencyError(ValueError):
    """A bound that must hold for every extension failed: the supplied
    composite oracle is internally inconsistent."""


@dataclass(frozen=True)
class EndFn:
    """Endpoint as a function of the base index: const + inv/l + lin*l."""

    const: Fraction
    inv: Fraction = Fraction(0)
    lin: Fraction = Fraction(0)

    def at(self, ell: int) -> Fraction:
        return self.const + self.inv / ell + self.lin * ell

    def limit(self) -> Union[Fraction, float]:
        if self.lin > 0:
            return POS_INF
        if self.lin < 0:
            return NEG_INF
        return self.const


@dataclass(frozen=True)
class BasePart:
    """One interval of the base; None endpoints mean -inf / +inf."""

    lo: Optional[EndFn]
    hi: Optional[EndFn]
    lo_closed: bool
    hi_closed: bool

    @staticmethod
    def affine(lo_c, lo_inv, hi_c, hi_inv, lo_closed=False, hi_closed=False) -> "BasePart":
        return BasePart(EndFn(rat(lo_c), rat(lo_inv)), EndFn(rat(hi_c), rat(hi_inv)),
                        lo_closed, hi_closed)

    @staticmethod
    def left_ray(hi: EndFn, hi_closed=False) -> "BasePart":
        return BasePart(None, hi, False, hi_closed)

    @staticmethod
    def right_ray(lo: EndFn, lo_closed=False) -> "BasePart":
        return BasePart(lo, None, lo_closed, False)

    def at(self, ell: int) -> Optional[Interval]:
        lo = self.lo.at(ell) if self.lo is not None else NEG_INF
        hi = self.hi.at(ell) if self.hi is not None else POS_INF
        return ivl(lo, hi, self.lo_closed, self.hi_closed)

    def endpoint_fns(self) -> list[EndFn]:
        return [e for e in (self.lo, self.hi) if e is not None]


def _crossing_bound(f: EndFn, g: EndFn) -> Optional[int]:
    """An index beyond which f - g keeps one sign: bound the roots of
    (f.lin-g.lin) l^2 + (f.const-g.const) l + (f.inv-g.inv) = 0."""
    a = f.lin - g.lin
    b = f.const - g.const
    c = f.inv - g.inv
    if a == 0 and b == 0:
        return None  # constant difference, no crossing
    if a == 0:
        root = -c / b
        return max(1, math.ceil(root) + 1) if root > 0 else 1
    cauchy = 1 + max(abs(b), abs(c)) / abs(a)
    return max(1, math.ceil(cauchy) + 1)


@dataclass(frozen=True)
class BaseFormula:
    """Finitely many BaseParts, optionally index-shifted (the base is read at
    l + index_shift, a cofinal reindexing with identical forcing power)."""

    parts: tuple[BasePart, ...]
    index_shift: int = 0

    def at(self, ell: int) -> IntervalSet:
        if ell < 1:
            raise ValueError("base index starts at 1")
        return self.raw_at(ell + self.index_shift)

    def raw_at(self, m: int) -> IntervalSet:
        return IntervalSet.of(*[p.at(m) for p in self.parts])

    def raw_threshold(self, constants: Sequence[Fraction]) -> int:
        """A raw index beyond which every order relation between base
        endpoints and the given constants is frozen.  Measures of derived
        sets are exactly a + b/m + c*m past this index."""
        fns = [f for p in self.parts for f in p.endpoint_fns()]
        fns = fns + [EndFn(rat(c)) for c in constants]
        worst = 1
        for i in range(len(fns)):
            for j in range(i + 1, len(fns)):
                b = _crossing_bound(fns[i], fns[j])
                if b is not None:
                    worst = max(worst, b)
        return max(worst, self.index_shift + 1)


@dataclass(frozen=True)
class AtomLimit:
    kind: str  # "point" | "escape" | "unsupported"
    location: Optional[Fraction] = None
    detail: str = ""


class FilterBaseMeasure:
    """A 0-1 finitely additive measure pinned down by omega(B_l) = 1."""

    def __init__(self, formula: BaseFormula, domain: Domain, check_budget: int = 8):
        self.formula = formula
        self.domain = domain
        carrier = domain.carrier
        prev = None
        for ell in range(1, check_budget + 1):
            b = formula.at(ell)
            if not b.is_subset(carrier):
                raise SetAlgebraError(f"B_{ell} leaves the carrier")
            if b.measure() == 0:
                raise SetAlgebraError(f"B_{ell} is lambda-null; filter bases "
                                      "need positive measure at every level")
            if prev is not None and not b.is_subset(prev):
                raise SetAlgebraError(f"B_{ell} is not nested inside B_{ell-1}")
            prev = b
        self._check_tail_nested(check_budget)

    def _check_tail_nested(self, budget):
        for p in self.formula.parts:
            if p.lo is not None and not (p.lo.lin > 0 or (p.lo.lin == 0 and p.lo.inv <= 0)):
                raise UnsupportedOracleError(
                    "base part lower endpoint is not eventually non-decreasing")
            if p.hi is not None and not (p.hi.lin < 0 or (p.hi.lin == 0 and p.hi.inv >= 0)):
                raise UnsupportedOracleError(
                    "base part upper endpoint is not eventually non-increasing")

    def at(self, ell: int) -> IntervalSet:
        return self.formula.at(ell)

    # -- the three-valued query ---------------------------------------------

    def query(self, e: IntervalSet) -> str:
        """Forced value of omega(e), or 'undetermined' (certified for all l)."""
        e = e.intersect(self.domain.carrier)
        m_star = self.formula.raw_threshold(e.endpoints())
        scan_hi = max(1, m_star - self.formula.index_shift) + 1
        for ell in range(1, scan_hi + 1):
            b = self.at(ell)
            if b.difference(e).is_null():
                return ONE
            if b.intersect(e).is_null():
                return ZERO
        if self._tail_identically_null(lambda b: b.difference(e), m_star):
            return ONE
        if self._tail_identically_null(lambda b: b.intersect(e), m_star):
            return ZERO
        return UNDETERMINED

    def _tail_identically_null(self, setfn: Callable[[IntervalSet], IntervalSet],
                               m_star: int) -> bool:
        """Is lambda(setfn(B_m)) = 0 for some (hence all larger) raw m > m_star?

        Beyond the stabilization index the measure is exactly a + b/m + c*m;
        three samples determine it, a fourth confirms.  The quantity is
        non-increasing (bases are nested), so it hits zero at a finite index
        iff it is identically zero on the tail.
        """
        samples = []
        idx = [m_star + 1, m_star + 2, m_star + 3, m_star + 4]
        for m in idx:
            v = setfn(self.formula.raw_at(m)).measure()
            if v == POS_INF:
                return False
            samples.append(v)
        m1, m2, m3, m4 = [Fraction(i) for i in idx]
        v1, v2, v3, v4 = samples
        a, b, c = _fit_abc((m1, v1), (m2, v2), (m3, v3))
        if a + b / m4 + c * m4 != v4:
            raise OracleConsistencyError("tail measure is not of the stabilized "
                                         "form a + b/m + c*m; threshold too small")
        return a == 0 and b == 0 and c == 0

    # -- accumulation analysis ------------------------------------------------

    def limit_analysis(self) -> AtomLimit:
        """Where does the base concentrate?  A single point of X (Dirac), an
        escape through lost boundary points or infinity (zero), or something
        this oracle class cannot resolve."""
        probe = self.formula.raw_threshold([]) + 1
        carrier = self.domain.carrier
        points: set[Union[Fraction, float]] = set()
        for p in self.formula.parts:
            if p.at(probe) is None and p.at(probe + 1) is None:
                continue  # the part died before the tail
            lo_lim = p.lo.limit() if p.lo is not None else NEG_INF
            hi_lim = p.hi.limit() if p.hi is not None else POS_INF
            if lo_lim == hi_lim and is_finite(lo_lim):
                points.add(lo_lim)
                continue
            if lo_lim == POS_INF or hi_lim == NEG_INF:
                # the part slides away whole
                points.add(POS_INF if lo_lim == POS_INF else NEG_INF)
                continue
            return AtomLimit("unsupported",
                             detail=f"a base part keeps positive length in the "
                                    f"limit ([{lo_lim}, {hi_lim}])")
        finite_pts = sorted(q for q in points if is_finite(q))
        infinite = [q for q in points if not is_finite(q)]
        in_carrier = [q for q in finite_pts if carrier.contains(q)]
        if len(in_carrier) == 1 and len(finite_pts) == 1 and not infinite:
            return AtomLimit("point", location=in_carrier[0])
        if not in_carrier:
            return AtomLimit("escape",
                             detail=f"limits {finite_pts + infinite} all fall "
                                    f"outside the carrier")
        return AtomLimit("unsupported",
                         detail=f"base oscillates between {finite_pts + infinite}, "
                                f"of which {in_carrier} lie in the carrier; the "
                                f"extension is not pinned down")


def _fit_abc(p1, p2, p3) -> tuple[Fraction, Fraction, Fraction]:
    """Solve v = a + b/l + c*l through three (l, v) samples."""
    (l1, v1), (l2, v2), (l3, v3) = p1, p2, p3
    # eliminate a: (v2 - v1) = b(1/l2 - 1/l1) + c(l2 - l1) etc.
    a11, a12, r1 = Fraction(1, l2) - Fraction(1, l1), l2 - l1, v2 - v1
    a21, a22, r2 = Fraction(1, l3) - Fraction(1, l1), l3 - l1, v3 - v1
    det = a11 * a22 - a12 * a21
    b = (r1 * a22 - a12 * r2) / det
    c = (a11 * r2 - r1 * a21) / det
    a = v1 - b / l1 - c * l1
    return a, b, c


# ---------------------------------------------------------------------------
# composite finitely additive functionals


@dataclass(frozen=True)
class QueryResult:
    lower: Union[Fraction, float]
    upper: Union[Fraction, float]
    determined: bool
    atom_answers: tuple[str, ...]
    density_part: Union[Fraction, float]


class CompositeFA:
    """nu = sum_i c_i omega_i + g lambda with c_i > 0, omega_i filter-base
    measures, g >= 0 an integrable step density."""

    def __init__(self, atoms: Sequence[tuple[Fraction, FilterBaseMeasure]] = (),
                 density: Optional[PiecewiseFn] = None,
                 domain: Optional[Domain] = None):
        self.atoms = tuple((rat(c), base) for c, base in atoms)
        for c, _ in self.atoms:
            if c <= 0:
                raise ValueError("atom coefficients must be positive")
        if domain is None:
            if self.atoms:
                domain = self.atoms[0][1].domain
            elif density is not None:
                domain = density.domain
            else:
                raise ValueError("an empty functional still needs a domain")
        self.domain = domain
        for _, base in self.atoms:
            if base.domain.carrier != domain.carrier:
                raise ValueError("all atoms must live on the same carrier")
        if density is None:
            density = PiecewiseFn.constant(domain, 0)
        if not density.is_step():
            raise ValueError("densities are step functions here")
        for p in density.pieces:
            if p.intercept < 0:
                raise ValueError("densities must be nonnegative")
            if p.intercept > 0 and not p.interval.is_bounded():
                raise ValueError("density must be integrable")
        self.density = density

    def density_integral(self, e: IntervalSet) -> Fraction:
        e = e.intersect(self.domain.carrier)
        total = Fraction(0)
        for p in self.density.pieces:
            if p.intercept == 0:
                continue
            total += p.intercept * IntervalSet.of(p.interval).intersect(e).measure()
        return total

    def total_mass(self) -> Fraction:
        return sum((c for c, _ in self.atoms), Fraction(0)) + \
            self.density_integral(self.domain.carrier)


def fa_query(nu: CompositeFA, e: IntervalSet) -> QueryResult:
    """Bounds on nu(e) valid for every extension of the filter bases."""
    answers = tuple(base.query(e) for _, base in nu.atoms)
    dens = nu.density_integral(e)
    lower = dens + sum((c for (c, _), a in zip(nu.atoms, answers) if a == ONE),
                       Fraction(0))
    upper = lower + sum((c for (c, _), a in zip(nu.atoms, answers)
                         if a == UNDETERMINED), Fraction(0))
    return QueryResult(lower, upper, all(a != UNDETERMINED for a in answers),
                       answers, dens)


# ---------------------------------------------------------------------------
# the hat measure


@dataclass(frozen=True)
class RegularBorel:
    """Point masses plus a step density: the class closed under restriction
    of composite functionals to C_0."""

    point_masses: tuple[tuple[Fraction, Fraction], ...]  # (location, mass)
    density: PiecewiseFn

    def measure_of(self, b: IntervalSet) -> Fraction:
        total = Fraction(0)
        for x, m in self.point_masses:
            if b.contains(x):
                total += m
        for p in self.density.pieces:
            if p.intercept != 0:
                total += p.intercept * IntervalSet.of(p.interval).intersect(b).measure()
        return total

    def total_mass(self) -> Fraction:
        return self.measure_of(IntervalSet.real_line())

    def is_zero(self) -> bool:
        return not self.point_masses and all(p.intercept == 0
                                             for p in self.density.pieces)


def hat(nu: CompositeFA, validate: bool = True) -> RegularBorel:
    """The Borel measure representing the restriction of nu to C_0(X).

    Each atom contributes its coefficient as a Dirac mass at the unique
    point its base shrinks to, when that point belongs to X and some base
    member has compact closure inside X; an atom escaping every compact
    contributes nothing.  Unresolvable bases raise instead of guessing.
    """
    masses: dict[Fraction, Fraction] = {}
    for c, base in nu.atoms:
        lim = base.limit_analysis()
        if lim.kind == "unsupported":
            raise UnsupportedOracleError(lim.detail)
        if lim.kind == "escape":
            continue
        _assert_compact_member(base)
        masses[lim.location] = masses.get(lim.location, Fraction(0)) + c
    out = RegularBorel(tuple(sorted(masses.items())), nu.density)
    if validate:
        _validate_against_minimax(nu, out)
    return out


def _assert_compact_member(base: FilterBaseMeasure, scan: int = 64):
    carrier = base.domain.carrier
    for ell in range(1, scan + 1):
        b = base.at(ell)
        cl = b.closure()
        if cl.is_compact() and cl.is_subset(carrier):
            return
    raise UnsupportedOracleError(
        "no base member with compact closure inside the carrier was found; "
        "the Dirac contribution cannot be certified")


def _validate_against_minimax(nu: CompositeFA, rb: RegularBorel):
    probes = []
    for x, _ in rb.point_masses:
        probes.append(IntervalSet.of(ivl(x - Fraction(1, 8), x + Fraction(1, 8),
                                         False, False)).intersect(nu.domain.carrier))
    probes.append(nu.domain.carrier)
    for b in probes:
        if b.is_empty():
            continue
        lo, hi = minimax_value(nu, b, side="inf-sup")
        v = rb.measure_of(b)
        if not (lo <= v <= hi):
            raise OracleConsistencyError(
                f"hat value {v} on {b} escapes the minimax enclosure [{lo}, {hi}]")


# ---------------------------------------------------------------------------
# minimax evaluation


def relative_interior_open(s: IntervalSet, carrier: IntervalSet) -> bool:
    """Is s open in the subspace topology of the carrier?"""
    outside = carrier.difference(s)
    return s == carrier.difference(outside.closure())


def _inner_compacts(b: IntervalSet, budget: int) -> list[IntervalSet]:
    """An increasing family of compacts inside b (open finite endpoints move
    in by 1/2^m, unbounded ends are clipped)."""
    out = []
    for m in range(1, budget + 1):
        eps = Fraction(1, 2 ** m)
        bound = Fraction(2 ** m)
        parts = []
        for p in b.parts:
            lo = p.lo if (is_finite(p.lo) and p.lo_closed) else \
                (p.lo + eps if is_finite(p.lo) else -bound)
            hi = p.hi if (is_finite(p.hi) and p.hi_closed) else \
                (p.hi - eps if is_finite(p.hi) else bound)
            parts.append(ivl(lo, hi, True, True))
        k = IntervalSet.of(*parts)
        if not k.is_empty():
            out.append(k)
    if b.is_compact() and not b.is_empty():
        out.append(b)
    return out


def _outer_opens(b: IntervalSet, carrier: IntervalSet, budget: int) -> list[IntervalSet]:
    out = []
    for m in range(1, budget + 1):
        out.append(b.fatten(Fraction(1, 2 ** m)).intersect(carrier))
    if relative_interior_open(b, carrier):
        out.append(b)
    return out


def _forced_on_every_open_superset(base: FilterBaseMeasure, k: IntervalSet) -> bool:
    """omega(G) = 1 forced for EVERY open G containing the compact k: holds
    iff the base shrinks to a point of k (then B_l eventually enters each
    fattening, and every open superset of a compact contains a fattening)."""
    lim = base.limit_analysis()
    return lim.kind == "point" and k.contains(lim.location)


def minimax_value(nu: CompositeFA, b: IntervalSet, side: str = "inf-sup",
                  budget: int = 8) -> tuple[Fraction, Fraction]:
    """Certified enclosure of hat(nu)(b) through the minimax formula over
    rational-endpoint compacts and opens.

    'inf-sup' (infimum over opens G >= b of the supremum of nu over compacts
    inside G) is evaluated as: upper bounds from forced queries on a
    shrinking family of opens, lower bounds from forced queries on an
    exhausting family of compacts inside b.  'sup-inf' strengthens the lower
    bound: for a compact k <= b the inner infimum over opens is itself
    bounded below by the atoms forced to 1 on every open superset of k.
    Both enclosures contain the true value for every extension of the bases.
    """
    if side not in ("inf-sup", "sup-inf"):
        raise ValueError("side is 'inf-sup' or 'sup-inf'")
    carrier = nu.domain.carrier
    b = b.intersect(carrier)
    compacts = _inner_compacts(b, budget)
    opens = _outer_opens(b, carrier, budget)
    lower = Fraction(0)
    for k in compacts:
        cand = fa_query(nu, k).lower
        if side == "sup-inf":
            forced = sum((c for c, base in nu.atoms
                          if _forced_on_every_open_superset(base, k)), Fraction(0))
            cand = max(cand, forced + nu.density_integral(k))
        lower = max(lower, cand)
    upper = nu.total_mass()
    for g in opens:
        upper = min(upper, fa_query(nu, g).upper)
    if lower > upper:
        raise OracleConsistencyError(
            f"minimax enclosure is empty on {b}: [{lower}, {upper}]")
    return lower, upper


# ---------------------------------------------------------------------------
# singularity detection and the howd bounds


@dataclass(frozen=True)
class SingularityWitness:
    alpha: Fraction
    compacts: tuple[IntervalSet, ...]
    measures: tuple[Fraction, ...]
    lower_bounds: tuple[Fraction, ...]


def singularity_witness(nu: CompositeFA, alpha, count: int = 8) -> Optional[SingularityWitness]:
    """Nested compacts K_n with forced nu(K_n) >= alpha and lambda(K_n) -> 0,
    drawn from the bases of atoms that restrict to Dirac masses; None when
    the Dirac mass available is below alpha (step densities contribute no
    singular part)."""
    alpha = rat(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    dirac_atoms = []
    for c, base in nu.atoms:
        lim = base.limit_analysis()
        if lim.kind == "unsupported":
            raise UnsupportedOracleError(lim.detail)
        if lim.kind == "point":
            dirac_atoms.append((c, base))
    total = sum((c for c, _ in dirac_atoms), Fraction(0))
    if total < alpha or not dirac_atoms:
        return None
    carrier = nu.domain.carrier
    start = 1
    while True:
        hulls = [base.at(start).closure() for _, base in dirac_atoms]
        k = IntervalSet.of(*[h for hull in hulls for h in hull.parts])
        if k.is_compact() and k.is_subset(carrier):
            break
        start += 1
        if start > 64:
            raise UnsupportedOracleError("no compact starting hull found")
    compacts, measures, lowers = [], [], []
    for n in range(start, start + count):
        hulls = [base.at(n).closure() for _, base in dirac_atoms]
        k = IntervalSet.of(*[h for hull in hulls for h in hull.parts])
        lower = fa_query(nu, k).lower
        if lower < alpha:
            raise OracleConsistencyError(
                f"singularity witness lost mass at n={n}: {lower} < {alpha}")
        compacts.append(k)
        measures.append(k.measure())
        lowers.append(lower)
    return SingularityWitness(alpha, tuple(compacts), tuple(measures), tuple(lowers))


@dataclass(frozen=True)
class HowdReport:
    lower_on_k: Fraction
    hat_on_b: Fraction
    upper_on_g: Fraction

    @property
    def ok(self) -> bool:
        return self.lower_on_k <= self.hat_on_b <= self.upper_on_g


def howd_bounds_check(nu: CompositeFA, k: IntervalSet, b: IntervalSet,
                      g: IntervalSet) -> HowdReport:
    """Verify nu(K) <= hat(nu)(B) <= nu(G) for K compact <= B <= G open,
    using the forced query bounds for the outer nu-values."""
    carrier = nu.domain.carrier
    if not k.is_compact():
        raise ValueError("K must be compact")
    if not relative_interior_open(g.intersect(carrier), carrier):
        raise ValueError("G must be open in the carrier")
    if not (k.is_subset(b) and b.is_subset(g)):
        raise ValueError("need K <= B <= G")
    rb = hat(nu, validate=False)
    report = HowdReport(fa_query(nu, k).lower, rb.measure_of(b),
                        fa_query(nu, g).upper)
    if not report.ok:
        raise OracleConsistencyError(
            f"howd chain violated: {report.lower_on_k} <= {report.hat_on_b} "
            f"<= {report.upper_on_g} fails")
    return report
