"""Multipartitions, dominance, tableaux, and the level-counting identity.

Everything the algebraic layers consume is visible here: the shapes that
index cell modules, the dominance order that organizes them, standard
tableaux and their distinguished permutations, and the purely combinatorial
rank formula for the split modules.
"""

from math import comb, factorial

from ariki_koike import (
    MultiPartition,
    d_of,
    dominates,
    lambda_sets,
    multipartitions,
    std_filtered,
    std_tableaux,
    t_row,
)

n, r = 3, 2
print(f"== multipartitions of n={n} with r={r} components (dominant first) ==")
for lam in multipartitions(n, r):
    print(f"  {lam.serialize():16}  standard tableaux: {len(std_tableaux(lam))}")

lam = MultiPartition([[2], [1]])
print(f"\n== standard tableaux of {lam.serialize()} and their permutations ==")
top = t_row(lam)
print(f"  row-reading tableau: {top.serialize()}")
for t in std_tableaux(lam):
    d = d_of(t)
    print(f"  {t.serialize():24} d(t) = {list(d.images)}  length {d.length()}")

print("\n== dominance among the shapes ==")
a, b = MultiPartition([[3], []]), MultiPartition([[2], [1]])
print(f"  {a.serialize()} dominates {b.serialize()}: {dominates(a, b)}")
print(f"  {b.serialize()} dominates {a.serialize()}: {dominates(b, a)}")

s = 1
print(f"\n== splitting at s={s}: levels by the size of the first component ==")
for bb in range(n + 1):
    level, above = lambda_sets(n, r, s, bb)
    print(f"  level {bb}: {[l.serialize() for l in level]}")

print("\n== the level rank formula ==")
print("  sum over the level of (two-sided filtered tableaux) x (all tableaux)")
for bb in range(n + 1):
    level, _ = lambda_sets(n, r, s, bb)
    got = sum(
        len(std_filtered(l, bb, s, two_sided=True)) * len(std_tableaux(l)) for l in level
    )
    want = comb(n, bb) * s ** bb * factorial(bb) * (r - s) ** (n - bb) * factorial(n - bb)
    print(f"  b={bb}: counted {got}, closed form {want}, equal: {got == want}")
