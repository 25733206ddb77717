#!/usr/bin/env python3
"""The same constant as an average: mean of phi(n) sigma(n) / n^2.

phi(n) sigma(n) <= n^2 always (each prime p^a in n contributes the
factor 1 - p^-(a+1) < 1 to the normalized product), and the running
mean of these normalized values converges to the very Euler product
that governs the f = 1 grid density.  The identity behind it: for a
multiplicative function bounded by 1, the mean value equals a product
of per-prime series; here each series telescopes to the factor
1 - 1/(p^2 (p+1)).
"""

from fractions import Fraction

from gcdkit import build_tables, euler_product, mean_value_series, prime_power_f

print("normalized per-prime-power values phi sigma / p^(2k):")
for p, k in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]:
    v = prime_power_f(p, k)
    print(f"  p^k = {p}^{k}: {v} = 1 - 1/{p ** (k + 1)} -> {Fraction(1) - v == Fraction(1, p ** (k + 1))}")

print()
print("running means over a sieve of 10^6:")
tables = build_tables(10**6)
series = mean_value_series(tables, [10, 100, 1000, 10**4, 10**5, 10**6])
for n, mean in series.checkpoints:
    print(f"  N = {n:>8}: mean = {mean:.10f}")

target = float(euler_product(10**5).value)
print(f"  Euler product = {target:.10f}")
print(f"  |final - product| = {abs(series.final - target):.2e}")
