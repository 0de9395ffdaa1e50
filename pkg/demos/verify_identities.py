"""Machine-check the summation identities the coefficient families satisfy.

The checks are exact: polynomial identities are compared coefficient by
coefficient after clearing denominators, and rational identities are
evaluated at enough sample points to be interpolation-complete.
"""
from fractions import Fraction

from qfaulhaber import (
    classical_check,
    verify_inverse_pair,
    verify_lemma1,
    verify_lemma2,
    verify_theorem1,
)

print("power-sum identities (cleared polynomial comparison):")
for which in ("p", "qmn", "t2mnq", "t2m1"):
    ok = all(verify_theorem1(which, m, n)
             for m in range(1, 5) for n in range(1, 5))
    print(f"  {which:7} m,n <= 4: {'ok' if ok else 'FAILED'}")

print("difference identities (exact Laurent comparison):")
for which in ("diff1", "inverseq", "diff", "sumd"):
    ok = all(verify_lemma2(which, m, l)
             for m in range(1, 7) for l in range(1, 7))
    print(f"  {which:9} m,l <= 6: {'ok' if ok else 'FAILED'}")

print("generating series against partial fractions:")
for ab in ((1, 1), (1, 0), (0, 1)):
    ok = all(verify_lemma1(*ab, Fraction(2), l, 12) for l in range(1, 5))
    print(f"  case {ab}: {'ok' if ok else 'FAILED'}")

print("triangular inverse pairs (interpolation-complete point sets):")
for family in ("P", "Q", "G", "H"):
    print(f"  family {family}, n = 5: "
          f"{'ok' if verify_inverse_pair(family, 5) else 'FAILED'}")

print(f"classical q=1 specialization, m <= 4, n <= 20: "
      f"{'ok' if classical_check(4, 20) else 'FAILED'}")
