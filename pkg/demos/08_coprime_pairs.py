#!/usr/bin/env python3
"""Counting coprime pairs exactly, and the 6/pi^2 law.

The number of ordered pairs (a, b) in [1,N]^2 with gcd(a, b) = 1 is
2 Phi(N) - 1: mirror each coprime pair below the diagonal and add the
single diagonal pair (1, 1).  Through the hyperbola route for Phi this
counts coprime pairs in squares of side 10^8 without breaking a sweat,
and the share of coprime pairs tends to 6/pi^2, the r >= 2 limit of
the f_r density story.
"""

import math
import time

from gcdkit import coprime_pair_count

print("exact counts vs a direct gcd scan:")
for n in (1, 10, 100, 300):
    brute = sum(
        1
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if math.gcd(a, b) == 1
    )
    fast = coprime_pair_count(n)
    print(f"  N = {n:>4}: count = {fast:>6}  brute = {brute:>6}  equal: {fast == brute}")

print()
print("density of coprime pairs vs 6/pi^2 = {:.10f}:".format(6 / math.pi**2))
for n in (10**2, 10**4, 10**6, 10**8):
    t0 = time.perf_counter()
    count = coprime_pair_count(n)
    dt = time.perf_counter() - t0
    density = count / n**2
    print(f"  N = 10^{len(str(n)) - 1}: density = {density:.10f}"
          f"  (count = {count:,}, {dt:.2f}s)")
