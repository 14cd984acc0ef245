#!/usr/bin/env python3
"""Extremal families in Johnson graphs: H_t(n,k) and its density.

J(n,k) has the k-subsets of [n] as vertices, adjacent when they share
k-1 points.  Its cliques come in exactly two shapes: wide (common core of
size k-1) and narrow (union of size k+1).  H_t(n,k) asks for the largest
family with no narrow (t+1)-clique, that is, at most t members inside any
(k+1)-subset.  For k=2, t=2 this is triangle-free edge sets and the answer
is Mantel's floor(n^2/4).
"""

from fractions import Fraction

from teachlab import (
    classify_clique,
    h_max,
    h_ratio,
    johnson_adjacent,
    narrow_clique_free,
    serialize_family,
)

print("=" * 64)
print("A. every Johnson clique is wide or narrow")
print("=" * 64)

examples = [
    ([{1, 2, 3}, {1, 2, 4}, {1, 2, 5}], "triangle around the core {1,2}"),
    ([{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}], "all 3-subsets of {1,2,3,4}"),
    ([{1, 2, 3}, {1, 2, 4}], "a single edge"),
    ([{1, 2, 3}], "a lone vertex"),
]
for sets, label in examples:
    cls = classify_clique(sets)
    print(f"  {label:<30} -> {cls.value}")
print("  an edge is both (core of size k-1 and union of size k+1 at once);")
print("  a lone vertex is neither.")

print()
print("=" * 64)
print("B. the H table on small parameters")
print("=" * 64)

print(f"  {'n':>3} {'k':>3} {'t':>3} {'H':>4} {'status':>8}")
for n, k, t in [(3, 2, 2), (4, 2, 2), (5, 2, 2), (6, 2, 2), (6, 3, 2), (7, 3, 3)]:
    res = h_max(n, k, t)
    print(f"  {n:>3} {k:>3} {t:>3} {res.size:>4} {res.status:>8}")
    assert narrow_clique_free(res.witness, t)

print()
print("  k=2, t=2 against Mantel's bound n^2/4:")
for n in range(3, 8):
    print(f"    n={n}: H = {h_max(n, 2, 2).size}, floor(n^2/4) = {n * n // 4}")

wit = h_max(5, 2, 2).witness
edges = serialize_family(wit).strip().replace("\n", "; ")
print(f"  extremal triangle-free witness for n=5: {edges}")
print("  (the complete bipartite graph on parts {1,5} and {2,3,4})")

print()
print("=" * 64)
print("C. the density h_t(n,k) = H / C(n,k) only ever drops")
print("=" * 64)

# deleting a point keeps the no-narrow-clique property, which is why the
# normalized density cannot increase with n
for k, t, hi in ((2, 2, 8), (3, 2, 7)):
    row = [h_ratio(n, k, t) for n in range(k + 1, hi + 1)]
    pretty = "  ".join(f"{q.numerator}/{q.denominator}" for q in row)
    print(f"  t={t}, k={k}, n={k + 1}..{hi}:  {pretty}")
    assert all(a >= b for a, b in zip(row, row[1:]))
print(f"  each chain starts at t/(k+1) (here {Fraction(2, 3)}), and t/(k+1)")
print("  is exactly the fallback the bound machinery uses when the exact")
print("  value is out of budget.")

print()
print("=" * 64)
print("D. what adjacency means: two sample vertex pairs")
print("=" * 64)

u, v, w = {1, 2, 3}, {1, 2, 4}, {4, 5, 6}
print(f"  {sorted(u)} ~ {sorted(v)}: {johnson_adjacent(u, v)}")
print(f"  {sorted(u)} ~ {sorted(w)}: {johnson_adjacent(u, w)}")
