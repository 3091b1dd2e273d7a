from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import grid_points, interval_sets
from linfweak.sets import (Domain, IntervalSet, SetAlgebraError, closed,
                           complement, ico, intersect, is_compact_subset,
                           ivl, measure, opened, point, union, POS_INF)


def S(*parts):
    return IntervalSet.of(*parts)


class TestUnion:
    def test_adjacent_merge(self):
        assert union(S(ico(0, 1)), S(ico(1, 2))) == S(ico(0, 2))

    def test_empty_identity(self):
        assert union(IntervalSet.empty(), S(closed(0, 1))) == S(closed(0, 1))

    def test_endpoint_sweep(self):
        # oracle: membership over the refined endpoint grid
        a = S(ico(0, F(1, 4)), ico(F(1, 2), F(3, 4)))
        b = S(ico(F(1, 8), F(5, 8)))
        got = union(a, b)
        assert got == S(ico(0, F(3, 4)))
        for x in grid_points(a, b):
            assert got.contains(x) == (a.contains(x) or b.contains(x))

    def test_open_endpoints_do_not_merge(self):
        assert union(S(opened(0, 1)), S(opened(1, 2))).parts != \
            S(opened(0, 2)).parts


class TestIntersect:
    def test_basic(self):
        assert intersect(S(ico(0, F(1, 2))), S(ico(F(1, 4), F(3, 4)))) == \
            S(ico(F(1, 4), F(1, 2)))

    def test_absorbing_empty(self):
        assert intersect(S(ico(0, 1)), IntervalSet.empty()).is_empty()

    def test_punctured_membership_oracle(self):
        a = S(opened(-1, 0), opened(0, 1))
        b = S(opened(F(-1, 4), F(1, 4)))
        got = intersect(a, b)
        assert got == S(opened(F(-1, 4), 0), opened(0, F(1, 4)))
        for x in grid_points(a, b):
            assert got.contains(x) == (a.contains(x) and b.contains(x))

    def test_idempotent(self):
        a = S(ico(0, 1), point(2))
        assert intersect(a, a) == a


class TestComplement:
    def test_half_open(self):
        dom = Domain(S(ico(0, 1)))
        assert complement(S(ico(0, F(1, 2))), dom) == S(ico(F(1, 2), 1))

    def test_empty(self):
        dom = Domain(S(opened(0, 1)))
        assert complement(IntervalSet.empty(), dom) == dom.carrier

    def test_membership_oracle(self):
        dom = Domain(S(opened(0, 1)))
        a = S(opened(0, F(1, 3)), opened(F(2, 3), 1))
        got = complement(a, dom)
        assert got == S(closed(F(1, 3), F(2, 3)))
        for x in grid_points(dom.carrier, a):
            assert got.contains(x) == (dom.carrier.contains(x) and not a.contains(x))

    def test_rejects_external_sets(self):
        dom = Domain(S(opened(0, 1)))
        with pytest.raises(SetAlgebraError):
            complement(S(opened(-1, F(1, 2))), dom)


class TestMeasure:
    def test_two_blocks(self):
        assert measure(S(ico(0, F(1, 4)), ico(F(1, 2), F(3, 4)))) == F(1, 2)

    def test_point_is_null(self):
        assert measure(S(point(F(1, 2)))) == 0

    def test_punctured_neighborhood(self):
        # E_l = (-1/(2l), 0) u (0, 1/(2l)) scaled: measure 2/k
        for k in (2, 5, 12):
            s = S(opened(F(-1, k), 0), opened(0, F(1, k)))
            assert measure(s) == F(2, k)

    def test_unbounded(self):
        assert measure(S(ivl(0, POS_INF, True, False))) == POS_INF


class TestCompactSubset:
    def test_closed_in_open(self):
        assert is_compact_subset(S(closed(F(1, 4), F(1, 2))), S(opened(0, 1)))

    def test_boundary_point_not_interior(self):
        assert not is_compact_subset(S(closed(0, F(1, 2))), S(ico(0, 1)))

    def test_two_blocks(self):
        k = S(closed(F(1, 8), F(1, 4)), closed(F(3, 8), F(1, 2)))
        assert is_compact_subset(k, S(opened(0, F(3, 4))))

    def test_open_set_is_not_compact(self):
        assert not is_compact_subset(S(opened(0, 1)), S(opened(-1, 2)))


class TestProperties:
    @given(interval_sets(), interval_sets())
    def test_de_morgan(self, a, b):
        box = Domain(S(closed(-20, 20)))
        a = a.intersect(box.carrier)
        b = b.intersect(box.carrier)
        lhs = complement(a.union(b), box)
        rhs = complement(a, box).intersect(complement(b, box))
        assert lhs == rhs
        lhs2 = complement(a.intersect(b), box)
        rhs2 = complement(a, box).union(complement(b, box))
        assert lhs2 == rhs2

    @given(interval_sets(), interval_sets())
    def test_finite_additivity_on_disjoint(self, a, b):
        b = b.difference(a)
        assert a.intersect(b).is_empty()
        assert measure(a.union(b)) == measure(a) + measure(b)

    @given(interval_sets())
    def test_normalize_idempotent(self, s):
        assert IntervalSet.of(*s.parts) == s

    @given(interval_sets())
    def test_complement_measure(self, a):
        box = Domain(S(closed(-20, 20)))
        a = a.intersect(box.carrier)
        assert measure(a) + measure(complement(a, box)) == measure(box.carrier)

    @given(interval_sets(), interval_sets())
    def test_union_measure_subadditive(self, a, b):
        assert measure(a.union(b)) <= measure(a) + measure(b)

    @given(interval_sets())
    def test_interior_closure_sandwich(self, s):
        assert s.interior().is_subset(s)
        assert s.is_subset(s.closure())
