"""Sequence families u_1, u_2, ... with machine-checkable certificates.

A family produces its k-th term on demand.  Certificates are declarations
about the whole family (disjoint supports, superlevel kernels, escape
windows, monotone envelopes, norm limits, support envelopes) that the
verdict engine first spot-checks exactly for k up to a verification budget
and then trusts beyond it; every verdict records that trust boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .enclosure import RatInterval, pi_enclosure, sin_of_pi_multiple, sin_of_rational
from .piecewise import PiecewiseFn, linear_combo
from .points import ExtPoint, WitnessPoint
from .sets import Domain, IntervalSet, ico, ioc, ivl, opened, point, rat


class CertificateError(ValueError):
    """A certificate failed its exact spot-check; carries the counterexample."""

    def __init__(self, message, k=None, witness=None):
        super().__init__(message)
        self.k = k
        self.witness = witness


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class DisjointSupports:
    """The supports of distinct terms intersect in lambda-null sets."""
    note: str = ""
    name = "disjoint-supports"


@dataclass(frozen=True)
class SuperlevelKernel:
    """kernel(k) is a positive-measure subset of A_alpha(u_k), nested
    decreasing in k; optionally the kernels accumulate at a point of the
    one-point compactification."""
    alpha: Fraction
    kernel: Callable[[int], IntervalSet]
    accumulation: Optional[ExtPoint] = None
    note: str = ""
    name = "superlevel-kernel"


@dataclass(frozen=True)
class EscapeBound:
    """For a translate family: |profile| < eps off [-window(eps), window(eps)]."""
    window: Callable[[Fraction], Fraction]
    note: str = ""
    name = "escape-bound"


@dataclass(frozen=True)
class MonotoneEnvelope:
    """|u_{k+1}| <= |u_k| almost everywhere."""
    note: str = ""
    name = "monotone-envelope"


@dataclass(frozen=True)
class NormLimit:
    """||u_k|| -> limit, with an exact deviation bound per index:
    | ||u_k|| - limit | <= deviation(k)."""
    limit: Fraction
    deviation: Callable[[int], Fraction]
    note: str = ""
    name = "norm-limit"


@dataclass(frozen=True)
class SupportEnvelope:
    """supp(u_k) is contained in envelope(k), a nested decreasing family of
    sets accumulating exactly at one point of X_infinity.  Localized verdicts
    away from that point follow from the envelope."""
    envelope: Callable[[int], IntervalSet]
    accumulation: ExtPoint
    note: str = ""
    name = "support-envelope"


Certificate = object


# ---------------------------------------------------------------------------
# families


class SequenceFamily:
    """Base class.  Subclasses define _term(k) (k >= 1)."""

    evaluable = False

    def __init__(self, domain: Domain, name: str,
                 norm_bound: Optional[Fraction] = None,
                 certificates: Sequence[Certificate] = ()):
        self.domain = domain
        self.name = name
        self.norm_bound = None if norm_bound is None else rat(norm_bound)
        self.certificates = tuple(certificates)
        self._cache: dict[int, PiecewiseFn] = {}

    def term(self, k: int) -> PiecewiseFn:
        if k < 1:
            raise ValueError("term index starts at 1")
        if k not in self._cache:
            self._cache[k] = self._term(k)
        return self._cache[k]

    def _term(self, k: int) -> PiecewiseFn:
        raise NotImplementedError

    def certificates_of(self, kind) -> list:
        return [c for c in self.certificates if isinstance(c, kind)]

    def abs_mapped(self) -> "SequenceFamily":
        """The family |u_k|.  All certificate kinds here only constrain |u_k|,
        so they carry over unchanged."""
        return _AbsMapped(self)

    def __repr__(self):
        return f"<family {self.name}>"


class _AbsMapped(SequenceFamily):
    def __init__(self, inner: SequenceFamily):
        super().__init__(inner.domain, f"abs({inner.name})", inner.norm_bound,
                         inner.certificates)
        self.inner = inner
        self.evaluable = inner.evaluable

    def _term(self, k):
        return self.inner.term(k).abs_fn()


class ExplicitListFamily(SequenceFamily):
    """A finite list of terms; by default the last one repeats forever."""

    def __init__(self, domain: Domain, terms: Sequence[PiecewiseFn],
                 name="explicit", norm_bound=None, certificates=(),
                 repeat_last: bool = True):
        if not terms:
            raise ValueError("an explicit family needs at least one term")
        if norm_bound is None:
            norm_bound = max(t.ess_sup_norm() for t in terms)
        super().__init__(domain, name, norm_bound, certificates)
        self.terms = tuple(terms)
        self.repeat_last = repeat_last

    def _term(self, k):
        if k <= len(self.terms):
            return self.terms[k - 1]
        if self.repeat_last:
            return self.terms[-1]
        raise ValueError(f"term {k} beyond the explicit list")

    def tail_constant(self) -> Optional[PiecewiseFn]:
        return self.terms[-1] if self.repeat_last else None

    def abs_mapped(self):
        return ExplicitListFamily(self.domain, [t.abs_fn() for t in self.terms],
                                  f"abs({self.name})", self.norm_bound,
                                  self.certificates, self.repeat_last)


class IndicatorFamily(SequenceFamily):
    """u_k = indicator of sets(k)."""

    def __init__(self, domain: Domain, sets: Callable[[int], IntervalSet],
                 name="indicator", certificates=()):
        super().__init__(domain, name, Fraction(1), certificates)
        self.sets = sets

    def _term(self, k):
        return PiecewiseFn.indicator(self.domain, self.sets(k))

    def abs_mapped(self):
        return self


class TranslateFamily(SequenceFamily):
    """u_k(x) = profile(x + k*step) on the real line."""

    def __init__(self, profile: PiecewiseFn, step=Fraction(1),
                 name="translate", certificates=()):
        if profile.domain.carrier != IntervalSet.real_line():
            raise ValueError("translate families need a profile on the whole line")
        step = rat(step)
        if step <= 0:
            raise ValueError("step must be positive")
        super().__init__(profile.domain, name, profile.ess_sup_norm(), certificates)
        self.profile = profile
        self.step = step

    def _term(self, k):
        return self.profile.translate(k * self.step)

    def tail_limits(self) -> tuple[Fraction, Fraction]:
        """(limit at -inf, limit at +inf) of the profile, exact."""
        first, last = self.profile.pieces[0], self.profile.pieces[-1]
        return (first.intercept, last.intercept)

    def breakpoint_span(self) -> tuple[Fraction, Fraction]:
        pts = self.profile.breakpoints()
        if not pts:
            return (Fraction(0), Fraction(0))
        return (pts[0], pts[-1])

    def abs_mapped(self):
        return TranslateFamily(self.profile.abs_fn(), self.step,
                               f"abs({self.name})", self.certificates)


class TentFamily(SequenceFamily):
    """Tent functions on (-1,1): u_k = 0 at 0 and for |x| >= 2/k, u_k = 1 for
    0 < |x| <= 1/k, linear between.  Pointwise null everywhere, weakly non-null."""

    def __init__(self, name="tents"):
        domain = Domain.open_interval(-1, 1)
        kernel = lambda k: IntervalSet.of(opened(Fraction(-1, k), 0),
                                          opened(0, Fraction(1, k)))
        envelope = lambda k: IntervalSet.of(
            opened(max(Fraction(-1), Fraction(-2, k)), min(Fraction(1), Fraction(2, k))))
        certs = (
            SuperlevelKernel(Fraction(1, 2), kernel, ExtPoint.at(0),
                             note="plateau of width 2/k around the puncture"),
            SupportEnvelope(envelope, ExtPoint.at(0)),
            MonotoneEnvelope(),
            NormLimit(Fraction(1), lambda k: Fraction(0)),
        )
        super().__init__(domain, name, Fraction(1), certs)

    def _term(self, k):
        one = Fraction(1)
        k = Fraction(k)
        pieces = []
        lo_plateau, hi_plateau = -1 / k, 1 / k
        lo_foot, hi_foot = -2 / k, 2 / k
        # ramps are open intervals; plateaus and feet own the breakpoints
        if lo_foot > -1:
            pieces.append((ioc(-1, lo_foot), 0, 0))
        if lo_plateau > -1:
            pieces.append((opened(max(lo_foot, Fraction(-1)), lo_plateau), k, 2))
            pieces.append((ico(lo_plateau, 0), 0, one))
        else:
            pieces.append((opened(-1, 0), 0, one))
        pieces.append((point(0), 0, 0))
        if hi_plateau < 1:
            pieces.append((ioc(0, hi_plateau), 0, one))
            pieces.append((opened(hi_plateau, min(hi_foot, Fraction(1))), -k, 2))
        else:
            pieces.append((opened(0, 1), 0, one))
        if hi_foot < 1:
            pieces.append((ico(hi_foot, 1), 0, 0))
        return PiecewiseFn.from_pieces(self.domain, [p for p in pieces if p is not None])

    def abs_mapped(self):
        return self


class SummableDisjointFamily(SequenceFamily):
    """u_k = sum_i coef_i * indicator(layer_i(k)) where each layer is a family
    of mutually disjoint sets.  The layer list is finite and exact; an
    optional declared tail bound describes the idealized infinite sum."""

    def __init__(self, domain: Domain, layers: Sequence[tuple[Fraction, Callable[[int], IntervalSet]]],
                 name="summable-disjoint",
                 tail_bound: Optional[Callable[[int], Fraction]] = None,
                 certificates: Sequence[Certificate] = ()):
        if not layers:
            raise ValueError("need at least one layer")
        coefs = [rat(c) for c, _ in layers]
        super().__init__(domain, name, sum(abs(c) for c in coefs), certificates)
        self.layers = [(rat(c), gen) for c, gen in layers]
        self.tail_bound = tail_bound

    def _term(self, k):
        fns = [PiecewiseFn.indicator(self.domain, gen(k)) for _, gen in self.layers]
        return linear_combo([c for c, _ in self.layers], fns)

    def abs_mapped(self):
        mapped = SummableDisjointFamily(
            self.domain, [(abs(c), gen) for c, gen in self.layers],
            f"abs({self.name})", self.tail_bound)
        return mapped


class MappedStepFamily(SequenceFamily):
    """p(u_k) - p(0) for a polynomial p over a step-function family.  Terms
    vanish wherever u_k does, so disjoint-support certificates carry over."""

    def __init__(self, inner: SequenceFamily, coeffs: Sequence[Fraction],
                 name: Optional[str] = None):
        coeffs = [rat(c) for c in coeffs]
        certs = tuple(c for c in inner.certificates if isinstance(c, DisjointSupports))
        bound = None
        if inner.norm_bound is not None:
            m = inner.norm_bound
            bound = sum(abs(c) * m ** i for i, c in enumerate(coeffs)) + abs(coeffs[0])
        super().__init__(inner.domain, name or f"poly({inner.name})", bound, certs)
        self.inner = inner
        self.coeffs = coeffs

    def _term(self, k):
        base = self.inner.term(k)
        return base.compose_poly(self.coeffs).add_const(-self.coeffs[0])


class SinTermHandle:
    """Evaluation handle for u_k(x) = sin(1/(k x)); piecewise representation
    is unavailable, only certified point enclosures."""

    def __init__(self, k: int, domain: Domain):
        self.k = k
        self.domain = domain

    def enclose(self, x: WitnessPoint, width: Fraction) -> RatInterval:
        k = self.k
        if x.kind == "inv-pi-multiple":
            # x = 1/(q*pi): sin(1/(k x)) = sin((q/k) * pi), reduced exactly
            return sin_of_pi_multiple(x.value / k, width)
        if x.value <= 0:
            raise ValueError("sin(1/(kx)) is only defined for x > 0 here")
        return sin_of_rational(Fraction(1) / (k * x.value), width)

    def continuous_at(self, x: WitnessPoint) -> bool:
        return True  # every point of the open domain avoids the singularity at 0


class SinReciprocalFamily(SequenceFamily):
    """u_k(x) = sin(1/(kx)) on (0, 44/7).

    The rational right endpoint 44/7 (just above 2*pi) keeps the carrier
    exactly representable; no computation below depends on it.  Terms have no
    piecewise-linear form; the family is evaluable through certified
    enclosures only.
    """

    evaluable = True

    def __init__(self, name="sin-reciprocal"):
        super().__init__(Domain.open_interval(0, Fraction(44, 7)), name, Fraction(1))

    def _term(self, k):
        return SinTermHandle(k, self.domain)

    def point_in_domain(self, x: WitnessPoint) -> bool:
        if x.kind == "rational":
            return self.domain.carrier.contains(x.value)
        # x = 1/(q*pi) > 0; x < 44/7 iff q*pi > 7/44
        pi_lo = pi_enclosure(Fraction(1, 10 ** 6)).lo
        return x.value * pi_lo > Fraction(7, 44)

    def abs_mapped(self):
        raise NotImplementedError("|sin| family is not needed; use enclosures")


# ---------------------------------------------------------------------------
# certificate verification


@dataclass
class CertReport:
    certificate: str
    passed: bool
    checked_upto: int
    detail: str = ""
    counterexample_k: Optional[int] = None
    witness: Optional[object] = None


def verify_certificate(family: SequenceFamily, cert, budget: int) -> CertReport:
    """Exact spot-check of a certificate's claim for indices up to budget.
    Returns a failing report with a concrete counterexample instead of
    raising; the engine turns failures into CertificateError."""
    if isinstance(cert, DisjointSupports):
        return _verify_disjoint(family, cert, budget)
    if isinstance(cert, SuperlevelKernel):
        return _verify_kernel(family, cert, budget)
    if isinstance(cert, EscapeBound):
        return _verify_escape(family, cert, budget)
    if isinstance(cert, MonotoneEnvelope):
        return _verify_monotone(family, cert, budget)
    if isinstance(cert, NormLimit):
        return _verify_norm_limit(family, cert, budget)
    if isinstance(cert, SupportEnvelope):
        return _verify_support_envelope(family, cert, budget)
    raise TypeError(f"unknown certificate {cert!r}")


def _verify_disjoint(family, cert, budget):
    supports = [family.term(k).support() for k in range(1, budget + 1)]
    for i in range(budget):
        for j in range(i + 1, budget):
            overlap = supports[i].intersect(supports[j])
            if not overlap.is_null():
                return CertReport(cert.name, False, budget,
                                  f"supports of u_{i+1} and u_{j+1} overlap",
                                  counterexample_k=j + 1, witness=overlap)
    return CertReport(cert.name, True, budget)


def _verify_kernel(family, cert, budget):
    prev = None
    for k in range(1, budget + 1):
        ker = cert.kernel(k)
        if ker.measure() <= 0:
            return CertReport(cert.name, False, budget, f"kernel({k}) is null",
                              counterexample_k=k, witness=ker)
        sup = family.term(k).superlevel(cert.alpha)
        if not ker.subset_up_to_null(sup):
            return CertReport(cert.name, False, budget,
                              f"kernel({k}) escapes the superlevel set",
                              counterexample_k=k, witness=ker.difference(sup))
        if prev is not None and not ker.subset_up_to_null(prev):
            return CertReport(cert.name, False, budget,
                              f"kernel({k}) is not nested in kernel({k-1})",
                              counterexample_k=k, witness=ker.difference(prev))
        prev = ker
    return CertReport(cert.name, True, budget)


_EPS_PROBE = [Fraction(1, 2 ** n) for n in range(0, 7)]


def _verify_escape(family, cert, budget):
    if not isinstance(family, TranslateFamily):
        return CertReport(cert.name, False, 0,
                          "escape bounds apply to translate families only")
    profile = family.profile
    for eps in _EPS_PROBE:
        w = rat(cert.window(eps))
        window = IntervalSet.of(ivl(-w, w, True, True))
        outside = profile.domain.carrier.difference(window)
        if outside.is_empty():
            continue
        tail_sup = profile.restrict(outside).ess_sup_norm()
        if tail_sup >= eps:
            return CertReport(cert.name, False, budget,
                              f"|profile| reaches {tail_sup} >= {eps} outside the window",
                              witness=eps)
    return CertReport(cert.name, True, budget)


def _verify_monotone(family, cert, budget):
    prev = family.term(1).abs_fn()
    for k in range(2, budget + 1):
        cur = family.term(k).abs_fn()
        bad = cur.sub(prev).gt_set(0)
        if not bad.is_null():
            return CertReport(cert.name, False, budget,
                              f"|u_{k}| exceeds |u_{k-1}| on a positive set",
                              counterexample_k=k, witness=bad)
        prev = cur
    return CertReport(cert.name, True, budget)


def _verify_norm_limit(family, cert, budget):
    for k in range(1, budget + 1):
        dev = rat(cert.deviation(k))
        if dev < 0:
            return CertReport(cert.name, False, budget, "negative deviation bound",
                              counterexample_k=k)
        norm = family.term(k).ess_sup_norm()
        if abs(norm - cert.limit) > dev:
            return CertReport(cert.name, False, budget,
                              f"||u_{k}|| = {norm} deviates from {cert.limit} by more "
                              f"than {dev}", counterexample_k=k, witness=norm)
    return CertReport(cert.name, True, budget)


def _verify_support_envelope(family, cert, budget):
    prev = None
    for k in range(1, budget + 1):
        env = cert.envelope(k)
        supp = family.term(k).support()
        if not supp.subset_up_to_null(env):
            return CertReport(cert.name, False, budget,
                              f"supp(u_{k}) escapes envelope({k})",
                              counterexample_k=k, witness=supp.difference(env))
        if prev is not None and not env.subset_up_to_null(prev):
            return CertReport(cert.name, False, budget,
                              f"envelope({k}) not nested", counterexample_k=k)
        prev = env
    return CertReport(cert.name, True, budget)


def verify_norm_bound(family: SequenceFamily, budget: int) -> CertReport:
    """Spot-check the declared uniform bound ||u_k|| <= M."""
    if family.norm_bound is None:
        return CertReport("norm-bound", False, 0, "no declared norm bound")
    if family.evaluable:
        return CertReport("norm-bound", True, 0, "declared for evaluable family")
    for k in range(1, budget + 1):
        n = family.term(k).ess_sup_norm()
        if n > family.norm_bound:
            return CertReport("norm-bound", False, budget,
                              f"||u_{k}|| = {n} > declared {family.norm_bound}",
                              counterexample_k=k, witness=n)
    return CertReport("norm-bound", True, budget)
