#!/usr/bin/env python3
"""A first walk through f(a,b) = gcd(a+b, ab) / gcd(a,b).

The quotient looks like it has no business being an integer, but it
always is: factor out g = gcd(a,b) and it collapses to gcd((a+b)/g, g).
This script shows the basic laws and the witness construction that
makes f hit every positive integer.
"""

import math

from gcdkit import decompose, f, f_r, surjectivity_witness

print("small values of f(a, b):")
for a, b in [(1, 1), (2, 2), (3, 6), (4, 6), (12, 18), (30, 42)]:
    print(f"  f({a:2d}, {b:2d}) = gcd({a+b}, {a*b}) / gcd({a}, {b}) = {f(a, b)}")

print()
print("the reduction behind the scenes, via decompose(a, b):")
for a, b in [(12, 18), (30, 42)]:
    d, ap, bp = decompose(a, b)
    print(f"  ({a}, {b}): d = {d}, a' = {ap}, b' = {bp},"
          f"  f = gcd(a'+b', d) = gcd({ap + bp}, {d}) = {f(a, b)}")

print()
print("every value c >= 2 is attained at (c, c^2 - c):")
for c in [2, 3, 7, 10, 101]:
    a, b = surjectivity_witness(c)
    print(f"  c = {c:3d}: f({a}, {b}) = {f(a, b)}")
print("  (and f(1, 1) = 1 covers c = 1)")

print()
print("laws on a 200 x 200 grid:")
ok_sym = all(f(a, b) == f(b, a) for a in range(1, 201) for b in range(1, 201))
ok_div = all(math.gcd(a, b) % f(a, b) == 0 for a in range(1, 201) for b in range(1, 201))
ok_diag = all(f(a, a) == math.gcd(2, a) for a in range(1, 201))
print(f"  symmetric:            {ok_sym}")
print(f"  f divides gcd(a, b):  {ok_div}")
print(f"  f(a, a) = gcd(2, a):  {ok_diag}")

print()
print("the higher-degree variant f_r(a,b) = gcd(a^r + b^r, ab)/gcd(a,b)")
print("loses the additive subtlety for r >= 2: it is 1 exactly when")
print("gcd(a, b) = 1.")
for r in (2, 3):
    iff = all(
        (f_r(a, b, r) == 1) == (math.gcd(a, b) == 1)
        for a in range(1, 101)
        for b in range(1, 101)
    )
    print(f"  r = {r}: (f_r = 1 iff coprime) on [1,100]^2: {iff}")
