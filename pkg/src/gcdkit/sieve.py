"""Linear sieve producing shared tables of phi, sigma, mu, and primes.

One pass keyed on the smallest prime factor fills every array in O(N):
for j = i*p with p = spf(i*p),

    phi(j)   = phi(i) * p          if p | i, else phi(i) * (p-1)
    mu(j)    = 0                   if p | i, else -mu(i)
    sigma(j) = sigma(i) / sigma(p^k) * sigma(p^(k+1))   tracking the
               spf-power part p^k of i exactly (integer division).

The returned arrays are marked read-only, so a single SieveTables can
be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

__all__ = ["SieveTables", "build_tables", "mertens_prefix", "primes_up_to"]


@dataclass(frozen=True)
class SieveTables:
    """Immutable arithmetic-function tables for 1 <= n <= limit.

    Arrays are indexed by n; index 0 is unused (zero).  spf[1] = 1 by
    convention; spf[p] = p for prime p.
    """

    limit: int
    phi: np.ndarray
    sigma: np.ndarray
    mu: np.ndarray
    spf: np.ndarray
    primes: np.ndarray


@njit(cache=True)
def _linear_sieve(limit):
    phi = np.zeros(limit + 1, np.int64)
    sigma = np.zeros(limit + 1, np.int64)
    mu = np.zeros(limit + 1, np.int8)
    spf = np.zeros(limit + 1, np.int32)
    # spf-power part p^k of each index and sigma(p^k), needed to extend
    # sigma multiplicatively when p divides i
    pw = np.zeros(limit + 1, np.int64)
    sp = np.zeros(limit + 1, np.int64)
    primes = np.zeros(limit // 2 + 2, np.int64)
    count = 0
    phi[1] = 1
    sigma[1] = 1
    mu[1] = 1
    spf[1] = 1
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            phi[i] = i - 1
            sigma[i] = i + 1
            mu[i] = -1
            pw[i] = i
            sp[i] = i + 1
            primes[count] = i
            count += 1
        for k in range(count):
            p = primes[k]
            j = i * p
            if p > spf[i] or j > limit:
                break
            spf[j] = p
            if p == spf[i]:
                phi[j] = phi[i] * p
                mu[j] = 0
                pw[j] = pw[i] * p
                sp[j] = sp[i] + pw[j]
                sigma[j] = (sigma[i] // sp[i]) * sp[j]
            else:
                phi[j] = phi[i] * (p - 1)
                mu[j] = -mu[i]
                pw[j] = p
                sp[j] = p + 1
                sigma[j] = sigma[i] * (p + 1)
    return phi, sigma, mu, spf, primes[:count]


def build_tables(limit: int) -> SieveTables:
    """Build all tables up to limit (inclusive) in one linear pass."""
    if limit < 1:
        raise ValueError(f"sieve limit must be >= 1, got {limit}")
    phi, sigma, mu, spf, primes = _linear_sieve(limit)
    for arr in (phi, sigma, mu, spf, primes):
        arr.setflags(write=False)
    return SieveTables(limit=limit, phi=phi, sigma=sigma, mu=mu, spf=spf, primes=primes)


def mertens_prefix(tables: SieveTables) -> np.ndarray:
    """Prefix sums M(x) = sum_{n<=x} mu(n), indexed by x with M(0) = 0."""
    prefix = np.cumsum(tables.mu.astype(np.int64))
    prefix.setflags(write=False)
    return prefix


def primes_up_to(limit: int) -> np.ndarray:
    """Ascending primes <= limit by a plain boolean sieve.

    Cheaper than build_tables when only the primes are wanted (Euler
    product truncations at 10^5..10^6).
    """
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.nonzero(is_p)[0].astype(np.int64)
