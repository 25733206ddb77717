"""Euler products with rigorous truncation enclosures, and the mean of
phi(n) sigma(n) / n^2.

Two infinite products over primes are evaluated by truncation at a
prime limit P, each with a proven tail bound.

Tail lemma.  For any x in (0, 1/2], -log(1-x) <= 2x.  Hence

  * product of (1 - 1/(p^2 (p+1))):  the discarded log mass is at most
    sum_{m>P} 2/m^3 <= 1/P^2, so the full product lies in
    [V exp(-1/P^2), V]  where V is the truncated value;
  * product of (1 - 1/p^2):  at most sum_{m>P} 2/m^2 <= 2/P, giving
    [V exp(-2/P), V].

Both bounds cover all integers m > P, not just primes, so they are
deliberately generous; nested-interval tests in the suite rely on that
slack.  tail_bound stores 1 - exp(-bound), the relative interval width.

Products and series accumulate in mpmath at 40 significant digits
(about 133 mantissa bits), so 10^5-factor products keep far more than
the six decimals reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from mpmath import mp, mpf

from .core import is_prime
from .sieve import SieveTables, primes_up_to

__all__ = [
    "EulerProductEstimate",
    "MeanValueSeries",
    "coprimality_product",
    "euler_product",
    "local_factor",
    "mean_value_series",
    "prime_power_f",
]

_DPS = 40

KIND_INTERACTION = "interaction-density"
KIND_COPRIMALITY = "coprimality"


@dataclass(frozen=True)
class EulerProductEstimate:
    """Truncated Euler product with an interval containing the full product.

    value is the product over primes <= prime_limit; the limit over all
    primes lies in [lower, upper] = [value * (1 - tail_bound), value].
    """

    kind: str
    prime_limit: int
    value: mpf
    tail_bound: mpf
    lower: mpf
    upper: mpf

    def contains(self, x) -> bool:
        return self.lower <= mpf(x) <= self.upper


@dataclass(frozen=True)
class MeanValueSeries:
    """Running means of phi(n) sigma(n) / n^2 sampled at checkpoints."""

    limit: int
    checkpoints: tuple[tuple[int, float], ...]
    final: float


def local_factor(p: int):
    """The factor 1 - 1/(p^2 (p+1)) at a prime p, as a 40-digit mpf."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    with mp.workdps(_DPS):
        pp = mpf(p)
        return 1 - 1 / (pp * pp * (pp + 1))


def _truncated_product(prime_limit: int, kind: str) -> EulerProductEstimate:
    if prime_limit < 2:
        raise ValueError(f"prime limit must be >= 2, got {prime_limit}")
    primes = primes_up_to(prime_limit).tolist()
    with mp.workdps(_DPS):
        value = mpf(1)
        if kind == KIND_INTERACTION:
            for p in primes:
                pp = mpf(p)
                value *= 1 - 1 / (pp * pp * (pp + 1))
            tail = 1 - mp.exp(-1 / mpf(prime_limit) ** 2)
        else:
            for p in primes:
                pp = mpf(p)
                value *= 1 - 1 / (pp * pp)
            tail = 1 - mp.exp(-2 / mpf(prime_limit))
        lower = value * (1 - tail)
    return EulerProductEstimate(
        kind=kind,
        prime_limit=prime_limit,
        value=value,
        tail_bound=tail,
        lower=lower,
        upper=value,
    )


def euler_product(prime_limit: int) -> EulerProductEstimate:
    """Product of 1 - 1/(p^2 (p+1)) over primes p <= prime_limit.

    The full product is the limiting proportion of pairs with
    f(a,b) = 1, about 0.8815138 (OEIS A065465).
    """
    return _truncated_product(prime_limit, KIND_INTERACTION)


def coprimality_product(prime_limit: int) -> EulerProductEstimate:
    """Product of 1 - 1/p^2 over primes p <= prime_limit.

    Converges to 1/zeta(2) = 6/pi^2, the density of coprime pairs.
    """
    return _truncated_product(prime_limit, KIND_COPRIMALITY)


def prime_power_f(p: int, k: int) -> Fraction:
    """phi(p^k) sigma(p^k) / p^(2k) as an exact fraction.

    Built from the definitions of phi and sigma at prime powers; the
    closed form 1 - p^-(k+1) is asserted against this in the tests.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    if k == 0:
        return Fraction(1)
    pk = p**k
    phi_pk = pk - pk // p
    sigma_pk = (pk * p - 1) // (p - 1)
    return Fraction(phi_pk * sigma_pk, pk * pk)


def mean_value_series(
    tables: SieveTables, checkpoints: Sequence[int]
) -> MeanValueSeries:
    """Running mean (1/N) sum_{n<=N} phi(n) sigma(n) / n^2 at each checkpoint.

    Each term uses the exact integer product phi(n)*sigma(n) divided
    once; segment sums go through math.fsum (exactly rounded), so 10^6
    near-unity terms lose nothing detectable.  The mean converges to
    the euler_product value.
    """
    cps = sorted(set(int(c) for c in checkpoints))
    if not cps:
        raise ValueError("at least one checkpoint is required")
    if cps[0] < 1:
        raise ValueError(f"checkpoints must be >= 1, got {cps[0]}")
    if cps[-1] > tables.limit:
        raise ValueError(
            f"checkpoint {cps[-1]} exceeds sieve limit {tables.limit}"
        )
    num = tables.phi * tables.sigma  # exact: phi*sigma <= n^2 <= limit^2
    den = np.square(np.arange(tables.limit + 1, dtype=np.float64))
    terms = num.astype(np.float64)
    np.divide(terms, den, out=terms, where=den > 0)
    segment_sums: list[float] = []
    out: list[tuple[int, float]] = []
    prev = 1
    for cp in cps:
        segment_sums.append(math.fsum(terms[prev : cp + 1].tolist()))
        out.append((cp, math.fsum(segment_sums) / cp))
        prev = cp + 1
    return MeanValueSeries(limit=tables.limit, checkpoints=tuple(out), final=out[-1][1])
