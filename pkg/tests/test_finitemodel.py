import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from linfweak.finitemodel import (FAVector, FiniteSpace,
                                  ZeroOneMeasure, atom_formula_check,
                                  dirac_alpha, dirac_alpha_is_unique,
                                  enumerate_zero_one_measures,
                                  enumerate_zero_one_measures_bruteforce,
                                  essential_range_bruteforce,
                                  extreme_points_unit_ball, integrate,
                                  is_filter, is_purely_finitely_additive,
                                  is_ultrafilter, jordan, mask_of,
                                  rainwater_check, ultrafilter_roundtrip,
                                  yosida_hewitt_split)
from linfweak.polytope import vertex_enumeration


class TestEnumerateG:
    def test_three_unit_weights(self):
        assert len(enumerate_zero_one_measures(FiniteSpace.of(1, 1, 1))) == 3

    def test_null_point_excluded(self):
        ws = enumerate_zero_one_measures(FiniteSpace.of(1, 0, 2))
        assert [w.point for w in ws] == [0, 2]

    def test_all_zero_weights(self):
        assert enumerate_zero_one_measures(FiniteSpace.of(0, 0)) == []

    @pytest.mark.parametrize("weights", [(1,), (1, 1), (1, 0, 2), (1, 1, 1),
                                         (F(1, 3), 0, F(2, 5), 1)])
    def test_bruteforce_agrees(self, weights):
        space = FiniteSpace.of(*weights)
        brute = enumerate_zero_one_measures_bruteforce(space)
        principal = enumerate_zero_one_measures(space)
        assert len(brute) == len(principal)
        for w in principal:
            as_dict = {m: w.value(m) for m in space.subsets()}
            assert as_dict in brute


class TestUltrafilters:
    def test_roundtrip(self):
        space = FiniteSpace.of(1, 1, 1)
        out = ultrafilter_roundtrip(ZeroOneMeasure(1), space)
        assert all(out["checks"].values())

    def test_exhaustive_axiom_check_n4(self):
        space = FiniteSpace.of(1, 2, F(1, 2), 3)
        for w in enumerate_zero_one_measures(space):
            out = ultrafilter_roundtrip(w, space)
            assert all(out["checks"].values())

    def test_non_maximal_filter_detected(self):
        space = FiniteSpace.of(1, 1, 1)
        # the filter of supersets of {0,1}: a filter, but not maximal
        base = mask_of([0, 1], 3)
        F_ = frozenset(m for m in space.subsets() if (m & base) == base)
        assert is_filter(F_, space)
        assert not is_ultrafilter(F_, space)

    def test_null_member_breaks_filter(self):
        space = FiniteSpace.of(1, 0, 1)
        F_ = frozenset(m for m in space.subsets() if (m >> 1) & 1)
        assert not is_filter(F_, space)


class TestIntegration:
    def test_point_evaluation(self):
        assert integrate([3, 3, 5], ZeroOneMeasure(2)) == 5

    def test_zero_vector(self):
        assert integrate([1, -1, 7], FAVector.of(0, 0, 0)) == 0

    def test_mixed_masses(self):
        assert integrate([1, -1, 7], FAVector.of(F(1, 2), F(1, 2), 0)) == 0

    def test_dirac_alpha(self):
        space = FiniteSpace.of(1, 1, 1)
        assert dirac_alpha([3, 3, 5], ZeroOneMeasure(0), space) == 3

    def test_dirac_alpha_uniqueness_grid(self):
        space = FiniteSpace.of(1, 1, 1)
        assert dirac_alpha_is_unique([3, 3, 5], ZeroOneMeasure(0), space)
        assert dirac_alpha_is_unique(
            [3, 3, 5], ZeroOneMeasure(0), space,
            candidates=[F(3) + F(1, 2 ** n) for n in range(1, 8)])

    def test_abs_alpha_identity(self):
        space = FiniteSpace.of(1, 1)
        alpha = dirac_alpha([-2, 4], ZeroOneMeasure(0), space)
        assert alpha == -2
        assert integrate([2, 4], ZeroOneMeasure(0)) == abs(alpha)


class TestEssentialRange:
    def test_two_values(self):
        assert essential_range_bruteforce([0, 1], FiniteSpace.of(1, 1)) == \
            {F(0), F(1)}

    def test_null_point_invisible(self):
        assert essential_range_bruteforce([0, 9], FiniteSpace.of(1, 0)) == {F(0)}

    def test_random_agreement_is_asserted_internally(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 4)
            space = FiniteSpace.of(*[rng.randint(0, 3) for _ in range(n)])
            if not space.positive_points():
                continue
            u = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            essential_range_bruteforce(u, space)  # raises on mismatch


class TestJordan:
    def test_example(self):
        space = FiniteSpace.of(1, 1)
        dec = jordan(FAVector.of(1, -2), space)
        assert dec.positive.masses == (1, 0)
        assert dec.negative.masses == (0, 2)
        assert dec.total_variation == 3

    def test_nonnegative_has_zero_negative_part(self):
        space = FiniteSpace.of(1, 1, 1)
        dec = jordan(FAVector.of(1, 0, F(2, 3)), space)
        assert all(m == 0 for m in dec.negative.masses)

    def test_sup_formula_random_n4(self):
        rng = random.Random(99)
        space = FiniteSpace.of(1, 1, 1, 1)
        for _ in range(25):
            nu = FAVector.of(*[F(rng.randint(-6, 6), rng.randint(1, 3))
                               for _ in range(4)])
            jordan(nu, space)  # verify=True checks all 2^4 subsets


class TestYosidaHewitt:
    def test_split_is_trivial(self):
        space = FiniteSpace.of(1, 2)
        nu = FAVector.of(F(1, 3), -1)
        mu, gamma = yosida_hewitt_split(nu, space)
        assert all(m == 0 for m in mu.masses)
        assert gamma == nu
        assert is_purely_finitely_additive(mu, space)
        assert not is_purely_finitely_additive(nu, space)

    def test_atom_formula(self):
        space = FiniteSpace.of(2, 3)
        for w in enumerate_zero_one_measures(space):
            assert atom_formula_check(w, space)


class TestExtremePoints:
    def test_two_points(self):
        verts = extreme_points_unit_ball(FiniteSpace.of(1, 1))
        assert len(verts) == 4

    def test_null_point_carries_no_vertex(self):
        verts = extreme_points_unit_ball(FiniteSpace.of(1, 0, 1))
        assert len(verts) == 4
        assert all(v.masses[1] == 0 for v in verts)

    def test_three_points(self):
        verts = extreme_points_unit_ball(FiniteSpace.of(1, 1, 1))
        assert len(verts) == 6

    def test_matches_plus_minus_g(self):
        space = FiniteSpace.of(F(1, 2), 1, 0, 2)
        verts = set(extreme_points_unit_ball(space))
        expected = set()
        for w in enumerate_zero_one_measures(space):
            expected.add(w.to_vector(space.n))
            expected.add(-w.to_vector(space.n))
        assert verts == expected


class TestVertexEnumeration:
    def test_square(self):
        cons = [((1, 0), F(1)), ((-1, 0), F(1)), ((0, 1), F(1)), ((0, -1), F(1))]
        verts = vertex_enumeration(cons)
        assert len(verts) == 4

    def test_cross_polytope_3d(self):
        from itertools import product
        cons = [(tuple(F(s) for s in signs), F(1))
                for signs in product((1, -1), repeat=3)]
        verts = vertex_enumeration(cons)
        assert sorted(verts) == sorted(
            tuple(F(1) if i == j else F(0) for i in range(3)) for j in range(3)
        ) + sorted(tuple(F(-1) if i == j else F(0) for i in range(3))
                   for j in range(3)) or len(verts) == 6

    def test_degenerate_cut(self):
        # a triangle: x >= 0, y >= 0, x + y <= 1
        cons = [((-1, 0), F(0)), ((0, -1), F(0)), ((1, 1), F(1))]
        verts = vertex_enumeration(cons)
        assert sorted(verts) == [(F(0), F(0)), (F(0), F(1)), (F(1), F(0))]


class TestRainwater:
    def test_constant_sequence(self):
        space = FiniteSpace.of(1, 1, 1)
        rep = rainwater_check(space, [[1, 2, 3]] * 5)
        assert rep.ball_converges and rep.extreme_converges and rep.agree

    def test_alternating_sequence(self):
        space = FiniteSpace.of(1, 1)
        vecs = [[k % 2, 0] for k in range(8)]
        rep = rainwater_check(space, vecs)
        assert not rep.ball_converges and not rep.extreme_converges and rep.agree

    def test_random_eventually_constant(self):
        rng = random.Random(5)
        space = FiniteSpace.of(1, 2, F(1, 2))
        for _ in range(20):
            tail = [F(rng.randint(-3, 3)) for _ in range(3)]
            vecs = [[F(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            vecs += [list(tail)] * 5
            rep = rainwater_check(space, vecs)
            assert rep.agree and rep.ball_converges


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_extreme_point_count_is_twice_live_points(ws):
    space = FiniteSpace.of(*ws)
    verts = extreme_points_unit_ball(space)
    assert len(verts) == 2 * len(space.positive_points())


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                min_size=1, max_size=4))
def test_yosida_hewitt_split_trivial_for_random_vectors(masses):
    space = FiniteSpace.of(*[1] * len(masses))
    nu = FAVector(tuple(F(m) for m in masses))
    mu, gamma = yosida_hewitt_split(nu, space)
    assert all(m == 0 for m in mu.masses) and gamma == nu
    assert is_purely_finitely_additive(nu, space) == \
        all(m == 0 for m in nu.masses)
