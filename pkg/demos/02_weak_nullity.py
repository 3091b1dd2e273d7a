"""The verdict engine: who converges weakly to zero, who does not, and why.

A bounded sequence u_k is weakly null iff for every alpha > 0 and every
strictly increasing subsequence some finite intersection of the sets
{ |u_kj| > alpha } is Lebesgue-null.  The engine decides this through
certified schemes and shows its evidence.
Run me: python demos/02_weak_nullity.py
"""

from fractions import Fraction as F

from linfweak import Policy, intersection_measure, test_weak_null, v_inf
from linfweak.corpus import (dyadic_indicators, dyadic_indicators_plus,
                             summable_disjoint, tents)

print("-- disjoint dyadic blocks: u_k = chi([2^-(k+1), 2^-k)) --")
fam = dyadic_indicators()
verdict = test_weak_null(fam)
print("verdict:", verdict.kind, "| scheme:", verdict.scheme)
print("any two blocks already give a null intersection:",
      intersection_measure(fam, [1, 2], F(1, 2), 2))

print()
print("-- the same blocks shifted onto each other: u_k^+ = chi([0, 2^-(k+1))) --")
plus = dyadic_indicators_plus()
verdict = test_weak_null(plus)
print("verdict:", verdict.kind, "| scheme:", verdict.scheme)
for J in (1, 4, 8):
    vj = v_inf(plus, list(range(1, J + 1)), J)
    print(f"  ||v_{J}|| = {vj.ess_sup_norm()}   "
          f"(v_J is 1 on (0, 1/2^{J + 1}): the blocks pile up at 0)")

print()
print("-- tents: pointwise null EVERYWHERE, yet not weakly null --")
fam = tents()
verdict = test_weak_null(fam)
print("verdict:", verdict.kind, "| scheme:", verdict.scheme)
print("u_k(1/10) for k = 5, 20, 25:",
      [fam.term(k).eval(F(1, 10)) for k in (5, 20, 25)])
print("but the kernel (-1/k,0) u (0,1/k) keeps measure 2/k inside every")
print("finite superlevel intersection:")
for row in verdict.witness.table[:4]:
    print("  J =", row["J"], " kernel measure =", row["kernel_measure"],
          " intersection measure =", row.get("intersection_measure"))

print()
print("-- summable disjoint layers (scheme d) --")
verdict = test_weak_null(summable_disjoint())
print("verdict:", verdict.kind, "| scheme:", verdict.scheme)
print("evidence:", verdict.evidence["layers"], "layers force v_J = 0 once J =",
      verdict.evidence["forcing_J"])
