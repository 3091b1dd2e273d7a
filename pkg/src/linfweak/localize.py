"""Localized weak-nullity tests and pointwise essential ranges.

Localization works on the one-point compactification X_inf = X u {inf}: a
sequence is weakly null at x0 iff the superlevel-set criterion holds with
every term restricted to each (small enough) neighborhood of x0.  The
canonical neighborhood base is balls (x0 - 1/l, x0 + 1/l) n X for finite x0
and complements of an exhausting family of compacts for the point at
infinity.  The criterion is monotone in the neighborhood (smaller windows
only weaken it), so certificates valid on every sufficiently small window
decide the localized verdict.

Finite points are allowed anywhere in the closure of the carrier: localizing
at a boundary point not in X means localizing along that single escape
route, which is strictly finer than the point at infinity (the latter glues
all escape routes together).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .engine import (INCONCLUSIVE, NONNULL, NULL, EngineError, Policy, Verdict,
                     Witness, test_weak_null)
from .families import (ExplicitListFamily, SequenceFamily, SuperlevelKernel,
                       SupportEnvelope, TranslateFamily)
from .piecewise import PiecewiseFn
from .points import ExtPoint
from .sets import Domain, IntervalSet, closed, is_finite, ivl, opened

__all__ = ["ExtPoint", "neighborhood", "compact_exhaustion", "escape_points",
           "accumulates_at", "essential_range", "essential_range_in",
           "essential_range_at", "test_weak_null_at"]


def compact_exhaustion(carrier: IntervalSet, ell: int) -> IntervalSet:
    """The l-th member of an increasing family of compacts exhausting the
    carrier: open finite endpoints move inward by 1/l, unbounded ends are
    cut at +-l.  Closed endpoints belong to the space and stay."""
    if ell < 1:
        raise ValueError("ell >= 1")
    eps = Fraction(1, ell)
    out = []
    for p in carrier.parts:
        lo = p.lo if (is_finite(p.lo) and p.lo_closed) else \
            (p.lo + eps if is_finite(p.lo) else Fraction(-ell))
        hi = p.hi if (is_finite(p.hi) and p.hi_closed) else \
            (p.hi - eps if is_finite(p.hi) else Fraction(ell))
        out.append(ivl(lo, hi, True, True))
    return IntervalSet.of(*out)


def neighborhood(domain: Domain, x0: ExtPoint, ell: int) -> IntervalSet:
    """The l-th canonical neighborhood of x0 inside the carrier."""
    if ell < 1:
        raise ValueError("ell >= 1")
    carrier = domain.carrier
    if x0.is_infinite:
        return carrier.difference(compact_exhaustion(carrier, ell))
    r = Fraction(1, ell)
    ball = IntervalSet.of(opened(x0.x - r, x0.x + r))
    return carrier.intersect(ball)


def escape_points(carrier: IntervalSet) -> tuple[list[Fraction], bool, bool]:
    """Finite boundary points not in the carrier, plus flags for escapes to
    -inf / +inf.  These are the routes a set can take toward the point at
    infinity."""
    finite = []
    to_neg = to_pos = False
    for p in carrier.parts:
        if is_finite(p.lo):
            if not p.lo_closed:
                finite.append(p.lo)
        else:
            to_neg = True
        if is_finite(p.hi):
            if not p.hi_closed:
                finite.append(p.hi)
        else:
            to_pos = True
    return sorted(set(finite)), to_neg, to_pos


def accumulates_at(s: IntervalSet, x0: ExtPoint, carrier: IntervalSet) -> bool:
    """Exact test: does s have positive measure in every neighborhood of x0?"""
    if x0.is_infinite:
        pts, to_neg, to_pos = escape_points(carrier)
        for p in s.parts:
            if p.is_point():
                continue
            if not is_finite(p.lo) or not is_finite(p.hi):
                return True
            if any(p.lo <= q <= p.hi for q in pts):
                return True
        return False
    x = x0.x
    return any((not p.is_point()) and p.lo <= x <= p.hi for p in s.parts)


def _validate_point(domain: Domain, x0: ExtPoint):
    if x0.is_infinite:
        return
    if not domain.carrier.closure().contains(x0.x):
        raise EngineError(f"{x0} is not in the closure of the domain")


# ---------------------------------------------------------------------------
# essential ranges


def essential_range(u: PiecewiseFn) -> IntervalSet:
    """R(u): all values attained with positive measure in every epsilon-band;
    for piecewise-linear u this is the union of the closed value intervals
    swept by pieces of positive length."""
    out = []
    for p in u.pieces:
        if p.is_null():
            continue
        lo_v, hi_v = p.closure_values()
        out.append(closed(lo_v, hi_v))
    return IntervalSet.of(*out)


def essential_range_in(u: PiecewiseFn, window: IntervalSet) -> IntervalSet:
    """Essential range of the restriction of u to a window."""
    return essential_range(u.restrict(window))


def essential_range_at(u: PiecewiseFn, x0: ExtPoint) -> IntervalSet:
    """R(u)(x0): values approached with positive measure inside every
    neighborhood of x0.  The per-neighborhood ranges stabilize: only pieces
    whose closure reaches x0 (through the carrier's escape routes, for the
    point at infinity) contribute, each with its limit value there."""
    _validate_point(u.domain, x0)
    vals: list[Fraction] = []
    if x0.is_infinite:
        pts, _, _ = escape_points(u.domain.carrier)
        for p in u.pieces:
            if p.is_null():
                continue
            iv = p.interval
            if not is_finite(iv.lo) or not is_finite(iv.hi):
                vals.append(p.intercept)  # unbounded pieces have slope 0
            for q in pts:
                if iv.lo <= q <= iv.hi:
                    vals.append(p.value(q))
    else:
        x = x0.x
        for p in u.pieces:
            if not p.is_null() and p.interval.lo <= x <= p.interval.hi:
                vals.append(p.value(x))
    from .sets import point as _pt
    return IntervalSet.of(*[_pt(v) for v in vals])


# ---------------------------------------------------------------------------
# localized verdicts


def test_weak_null_at(family: SequenceFamily, x0: ExtPoint,
                      policy: Optional[Policy] = None, ell_max: int = 6) -> Verdict:
    """Weak nullity of the family at a point of the one-point compactification.

    Globally null families are null at every point (the restricted criterion
    is weaker).  Otherwise the verdict comes from exact local analysis of the
    family's structure: translate tail limits, support envelopes away from
    their accumulation point, kernels accumulating at x0.
    """
    policy = policy or Policy()
    _validate_point(family.domain, x0)
    if family.evaluable:
        return _local_evaluable(family, x0, policy, ell_max)

    global_verdict = test_weak_null(family, policy)
    if global_verdict.is_null:
        v = Verdict(family.name, NULL, scheme="global-" + global_verdict.scheme,
                    evidence={"x0": str(x0), "from_global": True},
                    trust="globally null, hence null at every point: restricting "
                          "terms to a window only shrinks every superlevel "
                          "intersection; " + global_verdict.trust,
                    cert_reports=global_verdict.cert_reports)
        return v

    local = (_local_translate(family, x0, policy, ell_max)
             or _local_support_envelope(family, x0, policy, ell_max)
             or _local_kernel(family, x0, policy, ell_max)
             or _local_eventual_constant(family, x0, policy, ell_max)
             or _local_monotone(family, x0, policy, ell_max))
    if local is not None:
        return local
    return _local_inconclusive(family, x0, policy, ell_max)


test_weak_null_at.__test__ = False  # not a pytest case


def _local_translate(family, x0, policy, ell_max):
    if not isinstance(family, TranslateFamily):
        return None
    l_neg, l_pos = family.tail_limits()
    lo_bp, hi_bp = family.breakpoint_span()
    step = family.step
    if x0.is_infinite:
        if l_neg == 0 and l_pos == 0:
            return None  # the global escape scheme should have caught this
        side = l_neg if l_neg != 0 else l_pos
        alpha = abs(side) / 2
        sup = family.profile.superlevel(alpha)
        ray = None
        for p in sup.parts:
            if (l_neg != 0 and not is_finite(p.lo)) or \
               (l_neg == 0 and not is_finite(p.hi)):
                ray = p
        if ray is None:
            return None
        def kernel(k, _ray=ray, _s=step):
            return IntervalSet.of(_ray).shift(-k * _s)
        table = [{"ell": ell, "J": J, "note": "unbounded kernel ray in window"}
                 for ell in range(1, ell_max + 1) for J in (1, policy.j_max)]
        wit = Witness(alpha, "identity", kernel, table)
        return Verdict(family.name, NONNULL, scheme="local-translate-tail",
                       witness=wit,
                       evidence={"x0": str(x0), "tail_limits": (str(l_neg), str(l_pos)),
                                 "alpha": alpha},
                       trust="the profile keeps |value| > alpha on an unbounded "
                             "ray; its translates stay inside every neighborhood "
                             "of infinity with infinite measure, exactly",
                       )
    # finite point: far translates are identically the right tail value on a ball
    x = x0.x
    radius = Fraction(1, 1)
    thresh = _ceil_div(hi_bp - (x - radius), step) + 1
    thresh = max(thresh, 1)
    if l_pos == 0:
        window = IntervalSet.of(opened(x - radius, x + radius)).intersect(
            family.domain.carrier)
        restricted_norm = family.term(thresh).restrict(window).ess_sup_norm() \
            if not window.is_empty() else Fraction(0)
        if restricted_norm != 0:
            raise EngineError("translate tail analysis produced a wrong threshold")
        return Verdict(family.name, NULL, scheme="local-translate-vanishing",
                       evidence={"x0": str(x0), "threshold": thresh,
                                 "window_radius": radius},
                       trust=f"u_k is identically 0 on the window for every "
                             f"k >= {thresh} (all breakpoints lie left of the "
                             f"shifted window), so v_J vanishes there for "
                             f"J >= {thresh} along every subsequence; exact")
    alpha = abs(l_pos) / 2
    window = IntervalSet.of(opened(x - radius, x + radius)).intersect(
        family.domain.carrier)
    def kernel(k, _w=window):
        return _w
    table = [{"J": J, "k_J": thresh + J, "kernel_measure": window.measure()}
             for J in range(1, policy.j_max + 1)]
    wit = Witness(alpha, f"k_j = {thresh} + j", kernel, table)
    return Verdict(family.name, NONNULL, scheme="local-translate-constant",
                   witness=wit,
                   evidence={"x0": str(x0), "tail_value": l_pos},
                   trust=f"u_k is identically {l_pos} on the window for every "
                         f"k >= {thresh}; exact")


def _ceil_div(a: Fraction, b: Fraction) -> int:
    q = a / b
    return -((-q.numerator) // q.denominator)


def _local_support_envelope(family, x0, policy, ell_max):
    for cert in family.certificates_of(SupportEnvelope):
        if cert.accumulation == x0:
            continue
        sep = _separating_window(family.domain, x0, cert.accumulation, ell_max)
        if sep is None:
            continue
        window, ell = sep
        k_star = None
        for k in range(1, policy.k_max + 1):
            if cert.envelope(k).intersect(window).is_null():
                k_star = k
                break
        if k_star is None:
            continue
        return Verdict(family.name, NULL, scheme="local-support-envelope",
                       evidence={"x0": str(x0), "vanishing_from": k_star,
                                 "window_ell": ell},
                       trust=f"supports stay inside a nested envelope that is "
                             f"disjoint from the neighborhood from k >= {k_star} "
                             f"on, so the restricted terms vanish identically; "
                             f"envelope verified up to the certificate budget")
    return None


def _separating_window(domain, x0, accum: ExtPoint, ell_max):
    """A canonical neighborhood of x0 whose closure avoids the accumulation
    point of the envelope."""
    for ell in range(1, ell_max + 1):
        w = neighborhood(domain, x0, ell)
        if w.is_empty():
            return None
        if accum.is_infinite:
            if w.is_bounded():
                cls = w.closure()
                pts, _, _ = escape_points(domain.carrier)
                if all(not cls.contains(q) for q in pts):
                    return w, ell
        else:
            if not w.closure().contains(accum.x):
                return w, ell
    return None


def _local_kernel(family, x0, policy, ell_max):
    for cert in family.certificates_of(SuperlevelKernel):
        constant_kernel = all(cert.kernel(k) == cert.kernel(1) for k in (2, 3, 4))
        rows = []
        ok = True
        for ell in range(1, ell_max + 1):
            w = neighborhood(family.domain, x0, ell)
            if w.is_empty():
                ok = False
                break
            k_star = None
            if constant_kernel:
                # a fixed kernel works at x0 iff it accumulates there
                if accumulates_at(cert.kernel(1), x0, family.domain.carrier):
                    k_star = 1
            else:
                for k in range(1, policy.k_max + 1):
                    ker = cert.kernel(k)
                    if ker.measure() > 0 and ker.subset_up_to_null(w):
                        k_star = k
                        break
            if k_star is None:
                ok = False
                break
            rows.append({"ell": ell, "k_star": k_star,
                         "kernel_measure_in_window":
                             cert.kernel(k_star).intersect(w).measure()})
        if ok:
            wit = Witness(cert.alpha, f"k_j = k*(ell) + j", cert.kernel, rows)
            return Verdict(family.name, NONNULL, scheme="local-superlevel-kernel",
                           witness=wit,
                           evidence={"x0": str(x0), "alpha": cert.alpha},
                           trust=f"for every tested neighborhood the nested "
                                 f"kernels enter it and keep positive measure, "
                                 f"so no finite intersection restricted to it "
                                 f"is null; kernels verified to the budget and "
                                 f"trusted beyond (ell <= {ell_max})")
    return None


def _local_eventual_constant(family, x0, policy, ell_max):
    if not isinstance(family, ExplicitListFamily):
        return None
    tail = family.tail_constant()
    if tail is None:
        return None
    # the tail repeats forever, so nullity at x0 is decided by the essential
    # range of |tail| at x0: any positive limit value yields a kernel there
    local_range = essential_range_at(tail.abs_fn(), x0)
    top = max((p.hi for p in local_range.parts), default=Fraction(0))
    start = len(family.terms)
    if top == 0:
        return Verdict(family.name, NULL, scheme="local-eventual-constant",
                       evidence={"x0": str(x0)},
                       trust="every superlevel set of the repeated tail stays "
                             "away from the point; exact")
    alpha = top / 2
    kset = tail.superlevel(alpha)
    wit = Witness(alpha, f"k_j = {start} + j", lambda k: kset,
                  [{"note": "constant kernel accumulates at the point",
                    "limit_value": top}])
    return Verdict(family.name, NONNULL, scheme="local-eventual-constant",
                   witness=wit, evidence={"x0": str(x0), "alpha": alpha},
                   trust="the repeated tail keeps positive superlevel mass in "
                         "every neighborhood of the point; exact")


def _local_monotone(family, x0, policy, ell_max):
    """Monotone families: v_J = |u_kJ|, so nullity at x0 is driven by the
    largest limit value of |u_k| at x0.  Once that tops out at 0 the terms
    vanish essentially on small windows forever after (|u_k| only decreases);
    a positive floor across the budget yields a witness, trusted beyond."""
    from .families import MonotoneEnvelope
    if not family.certificates_of(MonotoneEnvelope):
        return None
    budget = policy.cert_budget
    tops = []
    for k in range(1, budget + 1):
        rng = essential_range_at(family.term(k).abs_fn(), x0)
        tops.append(max((p.hi for p in rng.parts), default=Fraction(0)))
    if tops[-1] == 0:
        k0 = next(k for k, t in enumerate(tops, start=1) if t == 0)
        return Verdict(family.name, NULL, scheme="local-monotone-vanishing",
                       evidence={"x0": str(x0), "vanishing_from": k0},
                       trust=f"every limit value of |u_{k0}| at the point is 0 "
                             f"and |u_k| is non-increasing, so restricted "
                             f"norms vanish for all k >= {k0}; exact given the "
                             f"monotone certificate")
    if min(tops) > 0:
        alpha = min(tops) / 2
        def kernel(k):
            return family.term(k).superlevel(alpha)
        rows = [{"k": k, "limit_value": t} for k, t in
                enumerate(tops[:ell_max], start=1)]
        wit = Witness(alpha, "identity", kernel, rows)
        return Verdict(family.name, NONNULL, scheme="local-monotone-floor",
                       witness=wit, evidence={"x0": str(x0), "alpha": alpha},
                       trust=f"|u_k| keeps a limit value above {alpha} at the "
                             f"point for every k <= {budget} (verified) and "
                             f"the nested superlevel sets are trusted beyond")
    return None


def _local_evaluable(family, x0, policy, ell_max):
    """sin(1/(kx)): |u_k| <= 1/(k a) on windows (a, b) with a > 0, which is an
    exact vanishing envelope at every finite interior point."""
    if x0.is_infinite:
        return Verdict(family.name, INCONCLUSIVE,
                       evidence={"x0": str(x0),
                                 "note": "witness points accumulate at the "
                                         "escape routes; the localized engine "
                                         "does not certify evaluable families "
                                         "at infinity"},
                       trust="no scheme applied")
    x = x0.x
    if x <= 0:
        return Verdict(family.name, INCONCLUSIVE,
                       evidence={"x0": str(x0),
                                 "note": "the singular end; norm floors there "
                                         "belong to the global witness"},
                       trust="no scheme applied")
    for ell in range(1, ell_max + 1):
        w = neighborhood(family.domain, x0, ell)
        if not w.is_empty() and all(p.lo > 0 for p in w.parts):
            a = min(p.lo for p in w.parts)
            return Verdict(family.name, NULL, scheme="local-evaluable-envelope",
                           evidence={"x0": str(x0), "window_ell": ell,
                                     "norm_envelope": f"1/(k*{a})"},
                           trust=f"|sin(1/(kx))| <= 1/(kx) <= 1/({a} k) on the "
                                 f"window, an exact strong-convergence envelope")
    return Verdict(family.name, INCONCLUSIVE, evidence={"x0": str(x0)},
                   trust="no scheme applied")


def _local_inconclusive(family, x0, policy, ell_max):
    rows = []
    alphas = (policy.alpha_grid or
              [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)])
    for ell in range(1, ell_max + 1):
        w = neighborhood(family.domain, x0, ell)
        if w.is_empty():
            continue
        for alpha in alphas[:3]:
            for J in range(1, min(policy.j_max, 6) + 1):
                inter = None
                for k in range(1, J + 1):
                    s = family.term(k).superlevel(alpha).intersect(w)
                    inter = s if inter is None else inter.intersect(s)
                rows.append({"ell": ell, "alpha": alpha, "J": J,
                             "measure": inter.measure()})
    return Verdict(family.name, INCONCLUSIVE, evidence={"x0": str(x0), "table": rows},
                   trust="no local scheme applied; exact restricted measures "
                         "for the tested cells only")
