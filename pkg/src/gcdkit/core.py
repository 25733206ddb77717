"""Integer arithmetic for the map f(a,b) = gcd(a+b, ab) / gcd(a,b).

f measures how much divisibility the sum a+b shares with the product
ab once the common part of a and b is factored out.  Writing a = d*a'
and b = d*b' with d = gcd(a,b) and gcd(a',b') = 1, the quotient
collapses to

    f(a, b) = gcd(a' + b', d) = gcd((a+b)/d, d)

which is what this module evaluates: one gcd, one exact division, one
gcd, and no product ab.  That keeps f cheap inside exhaustive grid
scans and immune to the size of a*b.  All functions are pure and
thread-safe.
"""

from __future__ import annotations

import math
from typing import NamedTuple

__all__ = [
    "GcdDecomposition",
    "decompose",
    "f",
    "f_r",
    "gcd",
    "is_prime",
    "surjectivity_witness",
]

# f_r forms a**r + b**r exactly; refuse sizes that would allocate
# megabyte-scale integers by accident.
_FR_BIT_LIMIT = 1 << 20


def _check_pair(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"arguments must be positive integers, got ({a}, {b})")


def gcd(x: int, y: int) -> int:
    """Greatest common divisor of nonnegative x, y with gcd(x, 0) = x.

    gcd(0, 0) has no greatest element and is rejected.
    """
    if x < 0 or y < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if x == 0 and y == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(x, y)


class GcdDecomposition(NamedTuple):
    """a = d * a_prime and b = d * b_prime with gcd(a_prime, b_prime) = 1."""

    d: int
    a_prime: int
    b_prime: int


def decompose(a: int, b: int) -> GcdDecomposition:
    """Split (a, b) into gcd d and coprime cofactors (a/d, b/d)."""
    _check_pair(a, b)
    d = math.gcd(a, b)
    return GcdDecomposition(d, a // d, b // d)


def f(a: int, b: int) -> int:
    """gcd(a+b, ab) / gcd(a,b), evaluated as gcd((a+b)/g, g) with g = gcd(a,b).

    The quotient is always a positive integer; it divides both gcd(a,b)
    and a+b, and f(a,b) = f(b,a).
    """
    _check_pair(a, b)
    g = math.gcd(a, b)
    return math.gcd((a + b) // g, g)


def f_r(a: int, b: int, r: int) -> int:
    """gcd(a**r + b**r, ab) / gcd(a,b); f_r with r=1 coincides with f.

    For r >= 2 the value is 1 exactly when gcd(a,b) = 1.  Arithmetic is
    exact; inputs whose r-th powers would exceed about a million bits
    raise OverflowError rather than silently grinding.
    """
    _check_pair(a, b)
    if r < 1:
        raise ValueError(f"exponent must be a positive integer, got {r}")
    if r * max(a.bit_length(), b.bit_length()) > _FR_BIT_LIMIT:
        raise OverflowError(
            f"a**{r} + b**{r} would exceed {_FR_BIT_LIMIT} bits; "
            "reduce r or the arguments"
        )
    return math.gcd(a**r + b**r, a * b) // math.gcd(a, b)


def surjectivity_witness(c: int) -> tuple[int, int]:
    """A pair (a, b) with f(a, b) = c, namely (c, c*c - c).

    Defined for c >= 2; c = 1 would give b = 0, outside the positive
    domain, and the value 1 is already attained by f(1, 1).
    """
    if c < 2:
        raise ValueError(
            f"witness requires c >= 2, got {c}; f(1, 1) = 1 covers the value 1"
        )
    return (c, c * c - c)


def is_prime(n: int) -> bool:
    """Primality by trial division; intended for small moduli and factors."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
