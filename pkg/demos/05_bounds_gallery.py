#!/usr/bin/env python3
"""The size-bound gallery: counting bound, Johnson refinement, closed forms.

A class with NCTD <= d cannot be arbitrarily large: at most 2^d concepts
can share a teaching set, giving ksz_bound(n, d) = 2^d * C(n, d).  The
refinement gub_bound multiplies the count by h + (1-h) * 2/(t+1), where h
bounds the density of heavy sets; those sets form narrow-clique-free
families in J(n, d) and are therefore provably sparse.  At d = 2 the exact
triangle-free density closes the bound to (5n-4)n/3.
"""

from fractions import Fraction
from math import comb

from teachlab import (
    bound_report,
    chernoff_bound,
    corollary_d2_bound,
    default_t,
    gub_bound,
    improved_factor,
    ksz_bound,
    sauer_phi,
)

print("=" * 64)
print("A. the counting quantities at small n, d")
print("=" * 64)

print(f"  {'n':>3} {'d':>2} {'Phi_d(n)':>9} {'ksz':>7} {'gub':>12} {'gub/ksz':>8}")
for n, d in [(6, 2), (10, 2), (10, 3), (14, 3), (14, 4), (20, 4)]:
    t = default_t(d)
    g = gub_bound(n, d, t)
    k = ksz_bound(n, d)
    print(
        f"  {n:>3} {d:>2} {sauer_phi(d, n):>9} {k:>7} "
        f"{str(g):>12} {float(g) / k:>8.4f}"
    )
print("  gub is an exact rational; the last column is the realized ratio.")

print()
print("=" * 64)
print("B. the guaranteed factor 2*sqrt(2/(d+1)) - 2/(d+1)")
print("=" * 64)

print(f"  {'d':>3} {'t(d)':>4} {'factor':>8}")
last = 1.0
for d in range(2, 16):
    f = improved_factor(d)
    print(f"  {d:>3} {default_t(d):>4} {f:>8.5f}")
    assert f < last or d == 2
    last = f
print("  strictly below 1 from d = 2 on, decaying like sqrt(8/d).")

print()
print("=" * 64)
print("C. d = 2 in closed form: (5n-4)n/3")
print("=" * 64)

for n in (4, 8, 16, 32):
    exact = corollary_d2_bound(n)
    via_gub = gub_bound(n, 2, 2, h=Fraction(n, 2 * (n - 1)))
    print(f"  n={n:>3}: bound = {exact} = {float(exact):.2f}, via gub = {via_gub}")
    assert exact == via_gub
print("  the closed form is the general bound with the exact triangle-free")
print("  density h = n/(2(n-1)) plugged in at t = 2.")

print()
print("=" * 64)
print("D. one call that assembles the whole story")
print("=" * 64)

for n, d in [(12, 1), (12, 2), (12, 3)]:
    rep = bound_report(n, d)
    line = "  ".join(f"{key}={val}" for key, val in rep.rows())
    print(f"  {line}")
print("  d = 1 has no refinement (no valid t): gub falls back to ksz.")

print()
print("=" * 64)
print("E. the tail bound behind the sampling experiments")
print("=" * 64)


def exact_lower_tail(p: Fraction, m: int, gamma: Fraction) -> Fraction:
    cutoff = (1 - gamma) * p * m
    q = 1 - p
    return sum(
        comb(m, i) * p**i * q ** (m - i) for i in range(m + 1) if i < cutoff
    )


print("  P[Bin(m, p) < (1-gamma) m p] vs exp(-p m gamma^2 / 2):")
print(f"  {'m':>5} {'p':>5} {'gamma':>5} {'exact tail':>12} {'chernoff':>12}")
for m, p, g in [(100, 0.5, 0.2), (100, 0.5, 0.5), (400, 0.1, 0.5), (400, 0.1, 1.0)]:
    ex = float(exact_lower_tail(Fraction(p), m, Fraction(g)))
    ch = chernoff_bound(p, m, g)
    print(f"  {m:>5} {p:>5} {g:>5} {ex:>12.3e} {ch:>12.3e}")
    assert ex <= ch + 1e-15
print("  concentration of this shape is what makes the random-tournament")
print("  threshold argument work: small teaching sets rarely survive.")
