"""Localizing weak convergence on the one-point compactification.

A sequence can converge weakly to zero at every finite point and still fail
at the point at infinity; essential ranges localize the same way.
Run me: python demos/03_localization.py
"""

from fractions import Fraction as F

from linfweak import ExtPoint, essential_range, essential_range_at, test_weak_null_at
from linfweak.corpus import center_segment, ring_indicators, sided_translates, tents
from linfweak.localize import essential_range_in, neighborhood

print("-- translates of a one-sided profile (1 near -inf, 0 near +inf) --")
fam = sided_translates()
for pt in ("0", "-3", "7/2"):
    v = test_weak_null_at(fam, ExtPoint.parse(pt))
    print(f"at x0 = {pt:4s}: {v.kind}  ({v.scheme})")
v = test_weak_null_at(fam, ExtPoint.infinity())
print(f"at infinity: {v.kind}  ({v.scheme})")

print()
print("-- tents localize their failure exactly at the origin --")
fam = tents()
for pt in ("0", "1/2"):
    v = test_weak_null_at(fam, ExtPoint.parse(pt))
    print(f"at x0 = {pt:4s}: {v.kind}  ({v.scheme})")

print()
print("-- essential ranges, global and localized --")
u = center_segment()  # chi((0,1/2)) on (-1,1)
print("R(u)        =", essential_range(u))
print("R(u)(0)     =", essential_range_at(u, ExtPoint.at(0)))
print("R(u)(1/4)   =", essential_range_at(u, ExtPoint.at(F(1, 4))))
print("R(u)(-1/2)  =", essential_range_at(u, ExtPoint.at(F(-1, 2))))
prof = sided_translates().profile
print("for the one-sided profile, R(u)(inf) =",
      essential_range_at(prof, ExtPoint.infinity()))

print()
print("-- shrinking rings: weakly null, yet unit values persist near 0 --")
fam = ring_indicators()
for ell in (1, 2, 3):
    w = neighborhood(fam.domain, ExtPoint.at(0), ell)
    print(f"inside the neighborhood {w}:",
          "term", ell + 2, "has local range",
          essential_range_in(fam.term(ell + 2), w))
print("but each term's exact range AT 0 is",
      essential_range_at(fam.term(4), ExtPoint.at(0)),
      "and the family is null at 0:",
      test_weak_null_at(fam, ExtPoint.at(0)).kind)
