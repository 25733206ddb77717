#!/usr/bin/env python3
"""The limiting density as an Euler product, with honest error bars.

The proportion of pairs with f = 1 tends to

    prod over primes p of (1 - 1/(p^2 (p+1)))  ~  0.8815138

(OEIS A065465, the quadratic class number constant).  Truncating at a
prime limit P leaves a tail we can bound: the discarded factors cost
at most sum_{m > P} 2/m^3 <= 1/P^2 in log terms, so the full product
sits inside [V exp(-1/P^2), V].  Watch the enclosure shrink.
"""

import math

from gcdkit import coprimality_product, euler_product, local_factor

print("per-prime factors 1 - 1/(p^2 (p+1)):")
for p in (2, 3, 5, 7):
    print(f"  p = {p}: {float(local_factor(p)):.10f}")

print()
print("truncated product with enclosure [lower, upper]:")
for limit in (10, 100, 1000, 10**4, 10**5):
    est = euler_product(limit)
    width = float(est.upper - est.lower)
    print(f"  P = {limit:>6}: value = {float(est.value):.10f}"
          f"  enclosure width = {width:.2e}  tail bound = {float(est.tail_bound):.2e}")

print()
print("the same machinery on 1 - 1/p^2 recovers 1/zeta(2):")
for limit in (100, 10**4, 10**6):
    est = coprimality_product(limit)
    print(f"  P = {limit:>7}: value = {float(est.value):.10f}")
print(f"  6/pi^2       = {6 / math.pi**2:.10f}")
