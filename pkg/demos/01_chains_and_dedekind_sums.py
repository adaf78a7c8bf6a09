"""Hirzebruch-Jung chains and Dedekind sums: the arithmetic ingredients.

Every invariant downstream is assembled from two kinds of arithmetic data
attached to a ratio n/q: the negative-regular continued fraction (its
coefficients, length, and excess), and the Dedekind sum d(1, q, n).  This
script walks through both, including the exact length/excess relation with
its factor-12 normalization.
"""

from fractions import Fraction

from rootcover import (
    barkan_residual,
    dedekind_fast,
    dedekind_sum,
    hj_dual,
    hj_evaluate,
    hj_expand,
    power_sums,
)

print("=== expansions ===")
for n, q in [(7, 5), (5, 1), (5, 4), (17, 5), (101, 37)]:
    e = hj_expand(n, q)
    print(f"{n}/{q} = {list(e.ks)}   s={e.s}  q'={e.q_inv}  excess={e.excess}")
    assert hj_evaluate(e.ks) == Fraction(n, q)  # nested-fraction round trip
print()

print("=== duality: the inverse ratio reverses the chain ===")
e = hj_expand(17, 5)
d = hj_dual(e)
print(f"17/5  = {list(e.ks)}")
print(f"17/{e.q_inv} = {list(d.ks)}  (reversed)")
print()

print("=== Dedekind sums ===")
print("d(1,5,7)  =", dedekind_fast(1, 5, 7), " (defining sum:", dedekind_sum([1, 5], 7), ")")
print("d(1,2,7)  =", dedekind_fast(1, 2, 7))
print("d(1,1,1,11) =", dedekind_sum([1, 1, 1], 11), " (odd dimension vanishes)")
print("power sums for (a,b,c,n) = (1,2,4,7):", power_sums(1, 2, 4, 7))
print()

print("=== length/excess relation: 12 d(1,q,n) + s = sum(k-2) + (q+q')/n ===")
for n, q in [(7, 5), (5, 1), (17, 16), (997, 123)]:
    e = hj_expand(n, q)
    lhs = 12 * dedekind_fast(1, q, n) + e.s
    print(f"n={n:4d} q={q:3d}:  12d+s = {lhs} = {e.excess} + {Fraction(q + e.q_inv, n)}"
          f"   residual = {barkan_residual(n, q)}")
print()
print("without the factor 12 the relation already fails at (7, 5):")
print("   d + s =", dedekind_fast(1, 5, 7) + 3, " but sum(k-2) + (q+q')/n =",
      1 + Fraction(8, 7))
