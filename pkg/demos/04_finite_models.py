"""The dual theory, fully computable on finite measure spaces.

On n weighted points everything can be enumerated: 0-1 measures are the
principal ones at positive-weight points, they biject with ultrafilters,
they are exactly the extreme points of the dual unit ball, and integrating
against them sweeps the essential range.
Run me: python demos/04_finite_models.py
"""

from fractions import Fraction as F

from linfweak.finitemodel import (FAVector, FiniteSpace, ZeroOneMeasure,
                                  dirac_alpha, enumerate_zero_one_measures,
                                  enumerate_zero_one_measures_bruteforce,
                                  essential_range_bruteforce,
                                  extreme_points_unit_ball, jordan,
                                  rainwater_check, ultrafilter_roundtrip)

space = FiniteSpace.of(1, 0, 2)
print("space weights:", space.weights, " (the middle point is lambda-null)")

print()
print("-- 0-1 measures: principal at positive-weight points --")
omegas = enumerate_zero_one_measures(space)
print("principal points:", [w.point for w in omegas])
brute = enumerate_zero_one_measures_bruteforce(space)
print("brute force over all {0,1} set functions finds", len(brute),
      "candidates -- the same ones")

print()
print("-- each corresponds to an ultrafilter, and back --")
out = ultrafilter_roundtrip(omegas[0], space)
print("axioms and roundtrip:", out["checks"])

print()
print("-- integration and the Dirac constant --")
u = [F(3), F(3), F(5)]
for w in omegas:
    print(f"omega at point {w.point}: integral of u = {dirac_alpha(u, w, space)}")
print("essential range of u:", sorted(essential_range_bruteforce(u, space)),
      " (the null point's value 3 is visible through point 0)")

print()
print("-- Jordan decomposition, sign split vs lattice sup-formula --")
nu = FAVector.of(1, -2, F(1, 2))
dec = jordan(nu, space)  # verifies the sup formula over every subset
print("nu+ =", dec.positive.masses, " nu- =", dec.negative.masses,
      " |nu|(X) =", dec.total_variation)

print()
print("-- extreme points of the dual unit ball = plus/minus 0-1 measures --")
for v in extreme_points_unit_ball(space):
    print("  vertex:", tuple(str(m) for m in v.masses))

print()
print("-- Rainwater reduction: convergence at extreme points decides --")
vecs = [[F(k % 2), F(0), F(1)] for k in range(6)]  # alternates at point 0
rep = rainwater_check(space, vecs)
print("alternating sequence: ball side", rep.ball_converges,
      "| extreme side", rep.extreme_converges, "| agree:", rep.agree)
