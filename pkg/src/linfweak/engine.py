"""The weak-nullity verdict engine.

A bounded sequence converges weakly to zero iff for every alpha > 0 and
every strictly increasing subsequence some finite intersection of the
superlevel sets A_alpha(u_kj) = { |u_kj| > alpha } is Lebesgue-null;
equivalently the pointwise minima v_J = min_j |u_kj| converge to zero in
norm.  Finite computation cannot quantify over all subsequences and all
alpha, so the engine certifies nullity only through one of the schemes below
(each reduces the full quantifier to a verified family certificate), and
certifies non-nullity through a kernel or norm-floor witness.  Everything
else is reported as Inconclusive together with the exact evidence table.

Schemes:
  (a) disjoint-supports      any two indices already give a null intersection
  (b) escape-bound           a translate family whose profile vanishes at
                             infinity; counting forces v_J below each eps
  (c) norm-limit             ||u_k|| -> 0 is strong convergence (with a
                             monotone envelope this is the Dini-type
                             equivalence, and limit c > 0 refutes nullity)
  (d) summable-disjoint      finitely many disjoint indicator layers force
                             v_J = 0 once J exceeds the layer count
  (e) eventual-constant      explicit lists that repeat their last term
  (w) divisibility witness   sin(1/(kx)): certified norm floors at
                             number-theoretic points refute nullity
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .enclosure import RatInterval, sin_of_pi_multiple
from .families import (CertificateError, CertReport, DisjointSupports,
                       EscapeBound, ExplicitListFamily, MonotoneEnvelope,
                       NormLimit, SequenceFamily, SinReciprocalFamily,
                       SummableDisjointFamily, SuperlevelKernel,
                       TranslateFamily, verify_certificate, verify_norm_bound)
from .numtheory import dyadic_divisibility_subsequence, nested_midpoint
from .piecewise import PiecewiseFn, min_of
from .points import WitnessPoint
from .sets import IntervalSet, POS_INF, rat


class EngineError(ValueError):
    pass


NULL = "null-certified"
NONNULL = "nonnull-certified"
INCONCLUSIVE = "inconclusive"


def _identity(j):
    return j


def _even(j):
    return 2 * j


def _odd(j):
    return 2 * j - 1


def _dyadic(j):
    return 2 ** j


DEFAULT_STRATEGIES: list[tuple[str, Callable[[int], int]]] = [
    ("identity", _identity), ("even", _even), ("odd", _odd), ("dyadic", _dyadic),
]


@dataclass
class Policy:
    """Budgets and grids for one engine run."""

    alpha_grid: Optional[list[Fraction]] = None
    strategies: Optional[list[tuple[str, Callable[[int], int]]]] = None
    extra_subsequences: list[list[int]] = field(default_factory=list)
    j_max: int = 12
    k_max: int = 48
    cert_budget: int = 20

    def resolved_strategies(self):
        return self.strategies if self.strategies is not None else DEFAULT_STRATEGIES


def default_alpha_grid(family: SequenceFamily, k_max: int) -> list[Fraction]:
    """Powers 1/2^n, n <= 8, plus every distinct nonzero |piece value| of the
    first k_max terms; piecewise-constant families change superlevel sets
    only at those thresholds."""
    grid = {Fraction(1, 2 ** n) for n in range(0, 9)}
    if not family.evaluable:
        for k in range(1, k_max + 1):
            for v in family.term(k).piece_value_candidates():
                if v > 0:
                    grid.add(v)
    return sorted(grid)


@dataclass
class Witness:
    """Kernel witness: a subsequence along which every finite superlevel
    intersection keeps at least the kernel's measure."""

    alpha: Fraction
    subsequence: str
    kernel: Optional[Callable[[int], IntervalSet]]
    table: list[dict] = field(default_factory=list)


@dataclass
class NormFloorWitness:
    """Point witness: certified |u_kj(x_J)| >= delta for all j <= J."""

    subsequence: list[int]
    delta: Fraction
    rows: list[dict] = field(default_factory=list)


@dataclass
class Verdict:
    family: str
    kind: str  # NULL | NONNULL | INCONCLUSIVE
    scheme: Optional[str] = None
    witness: Optional[Union[Witness, NormFloorWitness]] = None
    evidence: dict = field(default_factory=dict)
    trust: str = ""
    cert_reports: list[CertReport] = field(default_factory=list)

    @property
    def is_null(self) -> bool:
        return self.kind == NULL

    @property
    def is_nonnull(self) -> bool:
        return self.kind == NONNULL

    @property
    def definite(self) -> bool:
        return self.kind != INCONCLUSIVE


# ---------------------------------------------------------------------------
# the two exact quantities of the criterion


def v_inf(family: SequenceFamily, subseq: Sequence[int], J: int) -> PiecewiseFn:
    """v_J = pointwise min of |u_k1|, ..., |u_kJ|."""
    _check_subseq(subseq, J)
    if family.evaluable:
        raise EngineError("v_inf needs piecewise-representable terms")
    return min_of([family.term(k).abs_fn() for k in subseq[:J]])


def intersection_measure(family: SequenceFamily, subseq: Sequence[int],
                         alpha, J: int) -> Union[Fraction, float]:
    """lambda of the J-fold superlevel intersection along the subsequence.

    Computed twice: directly on the sets, and as the measure of the
    superlevel set of v_J; the two must agree exactly.
    """
    alpha = rat(alpha)
    _check_subseq(subseq, J)
    if family.evaluable:
        raise EngineError("intersection_measure needs piecewise terms")
    inter = None
    for k in subseq[:J]:
        s = family.term(k).superlevel(alpha)
        inter = s if inter is None else inter.intersect(s)
    direct = inter.measure()
    via_v = v_inf(family, subseq, J).superlevel(alpha).measure()
    if direct != via_v:
        raise EngineError(
            f"criterion identity violated: sets give {direct}, v_J gives {via_v}")
    return direct


def _check_subseq(subseq, J):
    if J < 1 or len(subseq) < J:
        raise EngineError("subsequence shorter than J")
    for a, b in zip(subseq, subseq[1:]):
        if b <= a:
            raise EngineError("subsequence must be strictly increasing")
    if subseq[0] < 1:
        raise EngineError("indices start at 1")


# ---------------------------------------------------------------------------
# verdict engine


def test_weak_null(family: SequenceFamily, policy: Optional[Policy] = None) -> Verdict:
    policy = policy or Policy()
    nb = verify_norm_bound(family, min(policy.cert_budget, policy.k_max))
    if not nb.passed:
        raise CertificateError(f"norm bound check failed: {nb.detail}",
                               k=nb.counterexample_k, witness=nb.witness)

    if family.evaluable:
        return _sin_dichotomy_verdict(family, policy)

    reports = [verify_certificate(family, c, policy.cert_budget)
               for c in family.certificates]
    for rep in reports:
        if not rep.passed:
            raise CertificateError(
                f"certificate {rep.certificate} failed: {rep.detail}",
                k=rep.counterexample_k, witness=rep.witness)

    verdict = (_try_eventual_constant(family, policy, reports)
               or _try_summable_disjoint(family, policy, reports)
               or _try_disjoint_supports(family, policy, reports)
               or _try_escape_bound(family, policy, reports)
               or _try_norm_limit_null(family, policy, reports))
    if verdict is not None:
        _guard_exclusive(family, policy, verdict)
        return verdict

    verdict = (_try_kernel_witness(family, policy, reports)
               or _try_monotone_nonnull(family, policy, reports))
    if verdict is not None:
        return verdict

    return _inconclusive(family, policy, reports)


test_weak_null.__test__ = False  # not a pytest case


def _trust_note(policy: Policy) -> str:
    return (f"certificates verified exactly for k <= {policy.cert_budget} "
            f"and trusted beyond; verdict quantifies over all subsequences "
            f"through the certified scheme")


def _guard_exclusive(family, policy, verdict):
    """A null verdict must not coexist with a verifying kernel witness."""
    for cert in family.certificates_of(SuperlevelKernel):
        rep = verify_certificate(family, cert, min(4, policy.cert_budget))
        if rep.passed:
            raise EngineError(
                f"inconsistent family {family.name}: scheme {verdict.scheme} "
                f"certifies nullity but a superlevel kernel also verifies")


def _spot_alphas(family, policy):
    grid = policy.alpha_grid or default_alpha_grid(family, min(policy.k_max, 12))
    return grid


def _try_eventual_constant(family, policy, reports):
    if not isinstance(family, ExplicitListFamily) or family.tail_constant() is None:
        return None
    tail = family.tail_constant()
    c = tail.ess_sup_norm()
    start = len(family.terms)
    if c == 0:
        return Verdict(family.name, NULL, scheme="eventual-constant",
                       evidence={"tail_norm": c, "list_length": start},
                       trust="exact: the repeated tail term vanishes a.e.",
                       cert_reports=reports)
    alpha = c / 2
    kernel_set = tail.superlevel(alpha)
    table = [{"J": J, "k_J": start + J, "kernel_measure": kernel_set.measure()}
             for J in range(1, policy.j_max + 1)]
    wit = Witness(alpha, f"k_j = {start} + j", lambda k: kernel_set, table)
    return Verdict(family.name, NONNULL, scheme="eventual-constant", witness=wit,
                   evidence={"tail_norm": c},
                   trust="exact: along the repeated tail every intersection "
                         "equals a fixed positive-measure superlevel set",
                   cert_reports=reports)


def _try_summable_disjoint(family, policy, reports):
    if not isinstance(family, SummableDisjointFamily):
        return None
    budget = policy.cert_budget
    for idx, (_, gen) in enumerate(family.layers):
        sets = [gen(k) for k in range(1, budget + 1)]
        for i in range(budget):
            for j in range(i + 1, budget):
                if not sets[i].intersect(sets[j]).is_null():
                    raise CertificateError(
                        f"layer {idx} of {family.name} is not disjoint "
                        f"at indices {i + 1},{j + 1}", k=j + 1,
                        witness=sets[i].intersect(sets[j]))
    j_zero = len(family.layers) + 1
    checks = {}
    for name, strat in policy.resolved_strategies():
        subseq = [strat(j) for j in range(1, j_zero + 1)]
        if subseq[-1] > policy.k_max:
            continue
        vj = v_inf(family, subseq, j_zero)
        checks[name] = vj.ess_sup_norm()
        if checks[name] != 0:
            raise EngineError(f"summable-disjoint pigeonhole violated on {name}")
    ev = {"layers": len(family.layers), "forcing_J": j_zero,
          "spot_norms": {n: str(v) for n, v in checks.items()}}
    if family.tail_bound is not None:
        ev["declared_tail"] = "sum_{i>I} |a_i| <= tail(I), supplied"
    return Verdict(family.name, NULL, scheme="summable-disjoint", evidence=ev,
                   trust="pigeonhole over the disjoint layers: any J > layer "
                         "count makes v_J vanish identically, for every "
                         "subsequence; " + _trust_note(policy),
                   cert_reports=reports)


def _try_disjoint_supports(family, policy, reports):
    if not family.certificates_of(DisjointSupports):
        return None
    alphas = _spot_alphas(family, policy)
    spot = {}
    for name, strat in policy.resolved_strategies():
        subseq = [strat(1), strat(2)]
        if subseq[-1] > policy.k_max:
            continue
        m = intersection_measure(family, subseq, alphas[0], 2)
        spot[name] = m
        if m != 0:
            raise EngineError("disjoint supports but positive pair intersection")
    return Verdict(family.name, NULL, scheme="disjoint-supports",
                   evidence={"pair_measures": {n: str(v) for n, v in spot.items()},
                             "alpha_spot": alphas[0]},
                   trust="any two distinct indices give a null superlevel "
                         "intersection for every alpha; " + _trust_note(policy),
                   cert_reports=reports)


def _try_escape_bound(family, policy, reports):
    certs = family.certificates_of(EscapeBound)
    if not certs or not isinstance(family, TranslateFamily):
        return None
    cert = certs[0]
    step = family.step
    table = []
    for eps in [Fraction(1, 2 ** n) for n in range(0, 7)]:
        w = rat(cert.window(eps))
        j_bound = math.floor(2 * w / step) + 2
        row = {"eps": eps, "window": w, "J_bound": j_bound}
        if j_bound <= policy.j_max + 4:
            subseq = list(range(1, j_bound + 1))
            vj = v_inf(family, subseq, j_bound)
            row["identity_norm"] = vj.ess_sup_norm()
            if row["identity_norm"] > eps:
                raise EngineError("escape counting bound violated on identity")
        table.append(row)
    return Verdict(family.name, NULL, scheme="escape-bound",
                   evidence={"table": table, "step": step},
                   trust="for each eps at most floor(2K/step)+1 translates "
                         "meet the window, so any J >= floor(2K/step)+2 "
                         "indices force v_J <= eps; " + _trust_note(policy),
                   cert_reports=reports)


def _try_norm_limit_null(family, policy, reports):
    for cert in family.certificates_of(NormLimit):
        if cert.limit == 0:
            norms = {k: family.term(k).ess_sup_norm()
                     for k in (1, 2, policy.cert_budget)}
            return Verdict(family.name, NULL, scheme="norm-limit",
                           evidence={"limit": Fraction(0),
                                     "norm_samples": {k: str(v) for k, v in norms.items()}},
                           trust="strong convergence: v_J <= |u_kJ| so every "
                                 "subsequence inherits the vanishing norms; "
                                 + _trust_note(policy),
                           cert_reports=reports)
    return None


def _try_kernel_witness(family, policy, reports):
    certs = family.certificates_of(SuperlevelKernel)
    if not certs:
        return None
    cert = certs[0]
    table = []
    for J in range(1, policy.j_max + 1):
        k_J = J
        ker_m = cert.kernel(k_J).measure()
        row = {"J": J, "k_J": k_J, "kernel_measure": ker_m}
        if J <= min(policy.j_max, 12):
            inter = intersection_measure(family, list(range(1, J + 1)), cert.alpha, J)
            row["intersection_measure"] = inter
            if inter != POS_INF and inter < ker_m:
                raise EngineError("kernel exceeds the intersection it certifies")
        table.append(row)
    wit = Witness(cert.alpha, "identity", cert.kernel, table)
    return Verdict(family.name, NONNULL, scheme="superlevel-kernel", witness=wit,
                   evidence={"alpha": cert.alpha},
                   trust="kernel(k_J) is nested inside every A_alpha(u_kj), "
                         "j <= J, with positive measure, so no J nullifies "
                         "the intersection; " + _trust_note(policy),
                   cert_reports=reports)


def _try_monotone_nonnull(family, policy, reports):
    monotone = family.certificates_of(MonotoneEnvelope)
    limits = [c for c in family.certificates_of(NormLimit) if c.limit > 0]
    if not monotone or not limits:
        return None
    cert = limits[0]
    alpha = cert.limit / 2
    table = []
    for J in range(1, policy.j_max + 1):
        m = family.term(J).superlevel(alpha).measure()
        if m == 0:
            raise EngineError("monotone family with positive norm limit has a "
                              "null superlevel set; certificates inconsistent")
        table.append({"J": J, "k_J": J, "kernel_measure": m})
    wit = Witness(alpha, "identity", lambda k: family.term(k).superlevel(alpha), table)
    return Verdict(family.name, NONNULL, scheme="monotone-norm-floor", witness=wit,
                   evidence={"limit": cert.limit, "alpha": alpha},
                   trust="|u_k| is non-increasing, so the J-fold intersection "
                         "equals A_alpha(u_kJ), which keeps positive measure "
                         "since ||u_k|| -> " + str(cert.limit) + "; "
                         + _trust_note(policy),
                   cert_reports=reports)


def _inconclusive(family, policy, reports):
    alphas = _spot_alphas(family, policy)
    table = []
    for alpha in alphas:
        for name, strat in policy.resolved_strategies():
            for J in range(1, policy.j_max + 1):
                subseq = [strat(j) for j in range(1, J + 1)]
                if subseq[-1] > policy.k_max:
                    break
                m = intersection_measure(family, subseq, alpha, J)
                table.append({"alpha": alpha, "subsequence": name, "J": J,
                              "measure": m})
                if m == 0:
                    break
    for subseq in policy.extra_subsequences:
        for alpha in alphas:
            for J in range(1, min(policy.j_max, len(subseq)) + 1):
                m = intersection_measure(family, subseq, alpha, J)
                table.append({"alpha": alpha, "subsequence": str(subseq), "J": J,
                              "measure": m})
                if m == 0:
                    break
    return Verdict(family.name, INCONCLUSIVE, scheme=None,
                   evidence={"table": table},
                   trust="no certificate scheme applied; the table shows exact "
                         "measures for the tested (alpha, subsequence, J) cells "
                         "only and decides nothing beyond them",
                   cert_reports=reports)


# ---------------------------------------------------------------------------
# sin(1/(kx)): witness machinery


@dataclass
class WitnessBound:
    status: str  # "certified" | "refuted" | "inconclusive"
    delta: Fraction
    enclosures: list[RatInterval]

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def witness_lower_bound(family: SequenceFamily, subseq: Sequence[int], J: int,
                        x: WitnessPoint, delta,
                        width=Fraction(1, 10 ** 9)) -> WitnessBound:
    """Certify ||v_J|| >= delta by rigorous point enclosures |u_kj(x)| >= delta.

    Sound by construction: certification uses enclosure lower ends only, and
    an enclosure too wide to decide yields 'inconclusive', never a false
    certificate.
    """
    delta = rat(delta)
    _check_subseq(subseq, J)
    if not family.evaluable:
        raise EngineError("witness_lower_bound applies to evaluable families")
    if not family.point_in_domain(x):
        raise EngineError(f"witness point {x} lies outside the domain")
    enclosures = []
    status = "certified"
    for k in subseq[:J]:
        handle = family.term(k)
        if not handle.continuous_at(x):
            raise EngineError(f"u_{k} is not declared continuous at {x}")
        enc = handle.enclose(x, rat(width)).abs()
        enclosures.append(enc)
        if enc.lo >= delta:
            continue
        status = "refuted" if enc.hi < delta else "inconclusive"
        break
    return WitnessBound(status, delta, enclosures)


def _sin_dichotomy_verdict(family: SinReciprocalFamily, policy: Policy) -> Verdict:
    """Certified norm floors along the dyadic-divisibility subsequence.

    Any subsequence of the naturals either admits a prime power dividing none
    of its entries (then the lcm points give a sin(pi/p^m) floor) or contains
    a divisibility chain of this dyadic shape (then nested midpoints give a
    1/sqrt(2) floor); either way v_J never reaches 0.
    """
    depth = min(policy.j_max, 5)
    ks = dyadic_divisibility_subsequence(1, depth)
    floor_enc = sin_of_pi_multiple(Fraction(1, 4), Fraction(1, 10 ** 9))
    # rounding the certified floor down to a dyadic keeps it valid and small
    delta = Fraction(floor_enc.lo.numerator * 2 ** 48
                     // floor_enc.lo.denominator, 2 ** 48)
    rows = []
    for J in range(1, depth + 1):
        prefix = ks[:J + 1]
        m0 = nested_midpoint(prefix)
        x = WitnessPoint.inv_pi_multiple(m0)
        wb = witness_lower_bound(family, prefix[1:], J, x, delta)
        if not wb.certified:
            raise EngineError(f"norm floor not certified at J={J}: {wb.status}")
        rows.append({"J": J, "indices": prefix[1:], "point": str(x),
                     "floor": delta,
                     "enclosure_los": [e.lo for e in wb.enclosures]})
    wit = NormFloorWitness(ks[1:], delta, rows)
    return Verdict(family.name, NONNULL, scheme="divisibility-point-witness",
                   witness=wit,
                   evidence={"delta": delta, "subsequence": ks[1:]},
                   trust=f"norm floors certified for J <= {depth}; the nested "
                         f"midpoint construction extends to every J, and any "
                         f"other subsequence carries a prime-power witness "
                         f"instead (declared)")
