from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import grid_points, interval_sets, rationals
from linfweak.piecewise import (EvaluationError, PiecewiseFn,
                                UnsupportedOperationError, linear_combo, min_of)
from linfweak.families import TentFamily
from linfweak.sets import Domain, IntervalSet, closed, ico, ivl, opened, point

DOM01 = Domain(IntervalSet.of(ico(0, 1)))


def chi(s, domain=DOM01):
    return PiecewiseFn.indicator(domain, s)


class TestEval:
    def test_step_inside(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        assert u.eval(F(1, 4)) == 1

    def test_tent_plateau(self):
        u = TentFamily().term(5)
        assert u.eval(F(1, 5)) == 1
        assert u.eval(F(-1, 5)) == 1
        assert u.eval(0) == 0

    def test_breakpoint_convention(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        assert u.eval(F(1, 2)) == 0  # right piece owns the breakpoint

    def test_outside_domain(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        with pytest.raises(EvaluationError):
            u.eval(2)

    def test_null_gap_left_piece(self):
        dom = Domain(IntervalSet.of(opened(0, 1)))
        u = PiecewiseFn.from_pieces(dom, [(opened(0, F(1, 2)), 0, 3),
                                          (opened(F(1, 2), 1), 0, 7)])
        assert u.eval(F(1, 2)) == 3


class TestMinAbsCombo:
    def test_min_of_steps(self):
        a = chi(IntervalSet.of(ico(0, F(1, 2))))
        b = chi(IntervalSet.of(ico(F(1, 4), F(3, 4))))
        m = min_of([a, b])
        assert m.gt_set(F(1, 2)) == IntervalSet.of(ico(F(1, 4), F(1, 2)))

    def test_abs_of_negated_indicator(self):
        a = chi(IntervalSet.of(ico(0, F(1, 2)))).negate()
        assert a.abs_fn().ae_equal(chi(IntervalSet.of(ico(0, F(1, 2)))))

    def test_min_of_tents_sampling_oracle(self):
        # symbolic min of tents u_3, u_5 equals the pointwise min on a grid
        t = TentFamily()
        u3, u5 = t.term(3).abs_fn(), t.term(5).abs_fn()
        m = min_of([u3, u5])
        level_one = m.domain.carrier.difference(m.sub(
            PiecewiseFn.constant(m.domain, 1)).ne_set(
                PiecewiseFn.constant(m.domain, 0)))
        assert level_one == IntervalSet.of(ivl(F(-1, 5), 0, True, False),
                                           ivl(0, F(1, 5), False, True))
        for x in [F(n, 60) for n in range(-59, 60)]:
            assert m.eval(x) == min(u3.eval(x), u5.eval(x))

    def test_linear_combo(self):
        a = chi(IntervalSet.of(ico(0, F(1, 2))))
        b = chi(IntervalSet.of(ico(F(1, 4), F(3, 4))))
        s = linear_combo([F(2), F(-1)], [a, b])
        assert s.eval(F(1, 8)) == 2
        assert s.eval(F(3, 8)) == 1
        assert s.eval(F(5, 8)) == -1

    def test_product_needs_a_step(self):
        ramp = PiecewiseFn.from_pieces(DOM01, [(ico(0, 1), 1, 0)])
        with pytest.raises(UnsupportedOperationError):
            ramp.product(ramp)
        step = chi(IntervalSet.of(ico(0, F(1, 2))))
        prod = ramp.product(step)
        assert prod.eval(F(1, 4)) == F(1, 4)
        assert prod.eval(F(3, 4)) == 0


class TestSuperlevel:
    def test_indicator(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        assert u.superlevel(F(1, 2)) == IntervalSet.of(ico(0, F(1, 2)))

    def test_alpha_must_be_positive(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        with pytest.raises(ValueError):
            u.superlevel(0)

    def test_zero_function(self):
        u = PiecewiseFn.constant(DOM01, 0)
        assert u.superlevel(F(1, 3)).is_empty()

    def test_tent_sign_check_oracle(self):
        # solve per piece, then confirm by sign checks at grid midpoints
        u = TentFamily().term(4)
        alpha = F(1, 2)
        got = u.superlevel(alpha)
        assert got == IntervalSet.of(opened(F(-3, 8), 0), opened(0, F(3, 8)))
        for x in [F(n, 64) for n in range(-63, 64)]:
            assert got.contains(x) == (abs(u.eval(x)) > alpha)

    def test_strict_inequality_flags(self):
        ramp = PiecewiseFn.from_pieces(DOM01, [(ico(0, 1), 1, 0)])
        got = ramp.superlevel(F(1, 2))
        # {x > 1/2}: endpoint excluded by strictness
        assert got == IntervalSet.of(opened(F(1, 2), 1))


class TestEssSup:
    def test_indicator(self):
        assert chi(IntervalSet.of(ico(0, F(1, 2)))).ess_sup_norm() == 1

    def test_null_piece_ignored(self):
        dom = Domain(IntervalSet.of(closed(0, 1)))
        u = PiecewiseFn.from_pieces(dom, [(ico(0, F(1, 2)), 0, 1),
                                          (point(F(1, 2)), 0, 7),
                                          (opened(F(1, 2), 1), 0, 1),
                                          (point(1), 0, 1)])
        assert u.ess_sup_norm() == 1

    def test_vj_plateau_norm(self):
        # pointwise min of the piled dyadic blocks keeps norm 1 for every J
        from linfweak.corpus import dyadic_indicators_plus
        fam = dyadic_indicators_plus()
        for J in (1, 3, 6):
            m = min_of([fam.term(k).abs_fn() for k in range(1, J + 1)])
            assert m.ess_sup_norm() == 1


class TestComposePoly:
    def test_square_of_indicator(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        assert u.compose_poly([0, 0, 1]).ae_equal(u)

    def test_constant_poly(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        c = u.compose_poly([1])
        assert c.ae_equal(PiecewiseFn.constant(DOM01, 1))

    def test_affine_shift(self):
        u = chi(IntervalSet.of(ico(0, F(1, 2))))
        v = u.compose_poly([-1, 2])  # 2t - 1
        assert v.eval(F(1, 4)) == 1
        assert v.eval(F(3, 4)) == -1

    def test_rejects_ramps(self):
        ramp = PiecewiseFn.from_pieces(DOM01, [(ico(0, 1), 1, 0)])
        with pytest.raises(UnsupportedOperationError):
            ramp.compose_poly([0, 1])


class TestProperties:
    @given(interval_sets(max_parts=2), rationals(lo=1, hi=4, max_den=6))
    def test_superlevel_ess_sup_duality(self, s, alpha):
        dom = Domain(IntervalSet.of(closed(-20, 20)))
        u = PiecewiseFn.indicator(dom, s.intersect(dom.carrier))
        null_level = u.superlevel(alpha).is_null() if alpha > 0 else None
        if alpha > 0:
            assert null_level == (u.ess_sup_norm() <= alpha)

    @given(st.integers(1, 8), st.integers(1, 8))
    def test_min_is_pointwise_min(self, i, j):
        t = TentFamily()
        u, v = t.term(i).abs_fn(), t.term(j).abs_fn()
        m = min_of([u, v])
        for x in [F(n, 17) for n in range(-16, 17)]:
            assert m.eval(x) == min(u.eval(x), v.eval(x))

    @given(st.integers(1, 6))
    def test_vj_superlevel_monotone_in_J(self, J):
        t = TentFamily()
        fns = [t.term(k).abs_fn() for k in range(1, J + 2)]
        for alpha in (F(1, 4), F(1, 2), F(3, 4)):
            a = min_of(fns[:J]).superlevel(alpha)
            b = min_of(fns).superlevel(alpha)
            assert b.is_subset(a)

    @given(interval_sets(max_parts=2))
    def test_translate_is_exact(self, s):
        dom = Domain.real_line()
        u = PiecewiseFn.indicator(dom, s)
        v = u.translate(3)
        for x in grid_points(s):
            assert v.eval(x - 3) == u.eval(x)
