#!/usr/bin/env python3
"""Tournament classes: 2n concepts, NCTD 1, and full recovery.

A tournament on [n] orients every pair.  Writing C_j for the winners
against player j, the class {C_1..C_n} together with its complements has
2n concepts and admits the canonical order-1 teacher that shows player j
its own index in both roles.  That is the largest any NCTD-1 class can
be, and the construction inverts: class + teacher recover the tournament.
"""

from collections import Counter

from teachlab import (
    all_tournaments,
    canonical_teacher,
    class1,
    class2,
    is_nc_teacher,
    linear_tournament,
    nctd,
    random_tournament,
    recover_tournament,
    serialize_class,
    serialize_tournament,
)

print("=" * 64)
print("A. the linear tournament on [3] and its classes")
print("=" * 64)

g = linear_tournament(3)
print("  edges (winner first):", sorted(g.edges()))
print("  class2 file:")
for line in serialize_class(class2(g)).splitlines():
    print("   ", line)
print("  (rows 1..3 are the winner sets C_j, rows 4..6 their complements;")
print("   over the linear order these are exactly the half-intervals)")

print()
print("=" * 64)
print("B. the canonical teacher and recovery")
print("=" * 64)

t = canonical_teacher(g)
print(f"  teacher order = {t.order}, admissible = {is_nc_teacher(t)}")
print(f"  nctd(class2) = {nctd(class2(g)).d}, nctd(class1) = {nctd(class1(g)).d}")
back = recover_tournament(class2(g), t)
print("  recovered tournament:")
for line in serialize_tournament(back).splitlines():
    print("   ", line)
print(f"  matches the original: {back.bits == g.bits}")

print()
print("=" * 64)
print("C. the map G -> class2(G) is onto the maxima but not injective")
print("=" * 64)

for n in (2, 3, 4):
    sets = Counter(frozenset(class2(gg).masks) for gg in all_tournaments(n))
    total = sum(sets.values())
    collisions = Counter(sets.values())
    profile = ", ".join(f"{m}x{c}" for c, m in sorted(collisions.items()))
    print(f"  n={n}: {total} tournaments -> {len(sets)} distinct classes"
          f"  (collision profile {profile})")
print("  reversing all edges preserves the concept set as a set; at n=3")
print("  every class comes from exactly one tournament-reversal pair.")

print()
print("=" * 64)
print("D. recovery survives a random detour")
print("=" * 64)

g8 = random_tournament(8, 20260815)
t8 = canonical_teacher(g8)
back8 = recover_tournament(class2(g8), t8)
print(f"  n=8 random tournament, {len(class2(g8))} concepts,"
      f" round-trip ok: {back8.bits == g8.bits}")
