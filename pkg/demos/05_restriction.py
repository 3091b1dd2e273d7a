"""Restricting finitely additive functionals to C_0: the hat measure.

A 0-1 measure pinned down by a nested filter base either shrinks to a point
of X (its restriction is a Dirac mass there) or escapes every compact (its
restriction vanishes).  The minimax formula over compacts and opens encloses
the answer, and singular parts are witnessed by nested compacts.
Run me: python demos/05_restriction.py
"""

from fractions import Fraction as F

from linfweak.corpus import (app3_base, closed_dirac_base, dirac_base,
                             escaping_base)
from linfweak.literals import parse_set
from linfweak.piecewise import PiecewiseFn
from linfweak.restriction import (CompositeFA, fa_query, hat, minimax_value,
                                  singularity_witness)
from linfweak.sets import Domain

print("-- the base (0, 1/l) on X = (0,1): escapes through the lost boundary --")
esc = escaping_base()
print("B_3 =", esc.at(3))
print("forced answers:  omega((0,1/2)) =", esc.query(parse_set("(0,1/2)")),
      " omega((1/2,1)) =", esc.query(parse_set("(1/2,1)")))
nu = CompositeFA([(F(1), esc)])
print("hat(omega) = 0?", hat(nu).is_zero(),
      "  (total mass 1 disappears under restriction to C_0)")

print()
print("-- the base shrinking to 1/2: restriction is the Dirac mass there --")
nu2 = CompositeFA([(F(1), dirac_base())])
rb = hat(nu2)
print("hat =", rb.point_masses)
for b in ("(1/4,3/4)", "{1/2}", "(0,1/4)"):
    lo, hi = minimax_value(nu2, parse_set(b), side="sup-inf")
    print(f"  minimax enclosure on {b:10s}: [{lo}, {hi}]   hat value:",
          rb.measure_of(parse_set(b)))

print()
print("-- three-valued queries: only forced answers, never guesses --")
q = fa_query(nu2, parse_set("(0,1/2)"))
print("query (0,1/2): bounds", (q.lower, q.upper), "determined:", q.determined,
      " (the base straddles the boundary point 1/2... endpoints matter)")

print()
print("-- densities pass through unchanged --")
x01 = Domain.open_interval(0, 1)
nu3 = CompositeFA([(F(1, 2), dirac_base())],
                  density=PiecewiseFn.constant(x01, F(1, 4)))
rb3 = hat(nu3)
print("hat point masses:", rb3.point_masses, " hat((0,1)) =",
      rb3.measure_of(x01.carrier))

print()
print("-- singularity witness: nested compacts with mass above 1/2 --")
nu4 = CompositeFA([(F(1), closed_dirac_base())])
wit = singularity_witness(nu4, F(1, 2), count=5)
for k, lam, lb in zip(wit.compacts, wit.measures, wit.lower_bounds):
    print(f"  K = {k}:  lambda = {lam},  forced mass >= {lb}")

print()
print("-- the tent separator: its base concentrates at the puncture --")
nu5 = CompositeFA([(F(1), app3_base())])
print("hat =", hat(nu5).point_masses,
      " (as a functional on L_inf it still sees every tent with value 1)")
