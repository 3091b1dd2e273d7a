"""Exact interval-set algebra: the carrier of every computation.

Sets are finite unions of rational-endpoint intervals with exact open/closed
flags; measure, union, intersection and complement are all exact rational
arithmetic.  Run me: python demos/01_interval_sets.py
"""

from fractions import Fraction as F

from linfweak import Domain, IntervalSet, ico, opened, point
from linfweak.literals import parse_set

a = parse_set("[0,1/4) u [1/2,3/4)")
b = parse_set("[1/8,5/8)")
print("a           =", a)
print("b           =", b)
print("a u b       =", a.union(b))
print("a n b       =", a.intersect(b))
print("measure(a)  =", a.measure())

dom = Domain.open_interval(0, 1)
c = parse_set("(0,1/3) u (2/3,1)")
print("complement of", c, "in (0,1) =", dom.carrier.difference(c))

# endpoint flags are tracked exactly, so compact/open distinctions decide
k = parse_set("[1/8,1/4] u [3/8,1/2]")
g = parse_set("(0,3/4)")
print(f"{k} compactly inside {g}?",
      k.is_compact() and k.is_subset(g.interior()))

# null sets: single points carry no measure but stay representable
spiky = IntervalSet.of(ico(0, F(1, 2)), point(F(3, 4)))
print("with an extra point:", spiky, "-> measure", spiky.measure())

# the punctured neighborhoods of the tent example: measure 2/k exactly
for k_ in (2, 5, 12):
    e = IntervalSet.of(opened(F(-1, k_), 0), opened(0, F(1, k_)))
    print(f"(-1/{k_},0) u (0,1/{k_}) has measure", e.measure())
