from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from linfweak.sets import IntervalSet, ivl

settings.register_profile(
    "default", deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


@st.composite
def rationals(draw, lo=-8, hi=8, max_den=12):
    num = draw(st.integers(lo * max_den, hi * max_den))
    den = draw(st.integers(1, max_den))
    return Fraction(num, den)


@st.composite
def interval_sets(draw, max_parts=3, bounded=True):
    """Random normalized interval sets with rational endpoints."""
    n = draw(st.integers(0, max_parts))
    parts = []
    for _ in range(n):
        a = draw(rationals())
        b = draw(rationals())
        lo, hi = (a, b) if a <= b else (b, a)
        lo_c = draw(st.booleans())
        hi_c = draw(st.booleans())
        if lo == hi:
            lo_c = hi_c = True
        parts.append(ivl(lo, hi, lo_c, hi_c))
    return IntervalSet.of(*parts)


def grid_points(*sets: IntervalSet, density=4):
    """Rational probe points: all endpoints, midpoints between consecutive
    endpoints, and points beyond the extremes.  A membership oracle grid."""
    pts = set()
    for s in sets:
        pts.update(s.endpoints())
    pts = sorted(pts)
    probes = set(pts)
    for a, b in zip(pts, pts[1:]):
        for i in range(1, density):
            probes.add(a + (b - a) * Fraction(i, density))
    if pts:
        probes.add(pts[0] - 1)
        probes.add(pts[-1] + 1)
    return sorted(probes)
