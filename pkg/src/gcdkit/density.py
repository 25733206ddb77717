"""Exhaustive statistics of f(a,b) over the grid [1,n] x [1,n].

f is symmetric, so the kernels enumerate unordered pairs i <= j and
weight off-diagonal cells by 2; an n x n grid costs n(n+1)/2 inner
iterations.  Work is split into contiguous row blocks with roughly
equal cell counts, the blocks run on a thread pool (the numba kernels
release the GIL), and per-block results are merged in block order.
Everything counted is an exact integer, so reports are bit-identical
for every thread count and schedule.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numba import njit

from .core import is_prime
from .fmt import decimal_str

__all__ = [
    "DensityReport",
    "HeatmapGrid",
    "LocalEventEstimate",
    "density_report",
    "heatmap",
    "local_event_density",
]

DEFAULT_HISTOGRAM_CAP = 10


@dataclass(frozen=True)
class DensityReport:
    """Exact census of f over the n x n grid.

    histogram maps each value 1..histogram_cap to its count of ordered
    pairs; overflow_count collects values above the cap.  rho is the
    exact proportion of pairs with f = 1.
    """

    n: int
    histogram_cap: int
    ones_count: int
    histogram: dict[int, int]
    overflow_count: int
    rho: Fraction

    def rho_str(self, places: int = 6) -> str:
        return decimal_str(self.rho.numerator, self.rho.denominator, places)

    @property
    def total_pairs(self) -> int:
        return self.n * self.n


@dataclass(frozen=True)
class HeatmapGrid:
    """Row-major grid with values[i-1, j-1] = f(i, j)."""

    n: int
    values: np.ndarray

    def ones_fraction(self) -> Fraction:
        return Fraction(int((self.values == 1).sum()), self.n * self.n)


@dataclass(frozen=True)
class LocalEventEstimate:
    """Frequency of the event: p divides gcd(a,b) and p divides a'+b'.

    Here a' = a/gcd(a,b), b' = b/gcd(a,b).  The grid frequency tends to
    1/(p^2 (p+1)) as n grows.
    """

    p: int
    n: int
    event_count: int
    density: Fraction
    target: Fraction


@njit(cache=True, nogil=True)
def _census_rows(i0, i1, n, cap):
    # hist[v] counts pairs with f = v for 1 <= v <= cap; hist[cap+1] is
    # the overflow bucket; hist[0] stays 0.
    hist = np.zeros(cap + 2, np.int64)
    for i in range(i0, i1):
        for j in range(i, n + 1):
            g = math.gcd(i, j)
            v = math.gcd((i + j) // g, g)
            w = 1 if i == j else 2
            if v <= cap:
                hist[v] += w
            else:
                hist[cap + 1] += w
    return hist


@njit(cache=True, nogil=True)
def _local_event_rows(i0, i1, n, p):
    # Only multiples of p can have p | gcd(i, j); for such pairs the
    # event reduces to p | (i+j)/gcd(i,j).
    count = 0
    first = i0 + (p - i0 % p) % p
    for i in range(first, i1, p):
        for j in range(i, n + 1, p):
            g = math.gcd(i, j)
            if ((i + j) // g) % p == 0:
                count += 1 if i == j else 2
    return count


def _row_blocks(n: int, block_count: int) -> list[tuple[int, int]]:
    """Contiguous row ranges covering 1..n with near-equal cell counts.

    Row i contributes n-i+1 cells, so early rows are heavier; block
    boundaries follow the cumulative cell count.
    """
    block_count = max(1, min(block_count, n))
    total = n * (n + 1) // 2
    blocks: list[tuple[int, int]] = []
    start = 1
    acc = 0
    k = 1
    for i in range(1, n + 1):
        acc += n - i + 1
        if acc * block_count >= k * total:
            blocks.append((start, i + 1))
            start = i + 1
            k += 1
    if start <= n:
        blocks.append((start, n + 1))
    return blocks


def _resolve_threads(threads: int | None) -> int:
    if threads is None or threads == 0:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError(f"thread count must be positive, got {threads}")
    return threads


def density_report(
    n: int,
    histogram_cap: int = DEFAULT_HISTOGRAM_CAP,
    threads: int | None = None,
) -> DensityReport:
    """Exact count of f values over all ordered pairs in [1,n]^2.

    threads=None uses all cores; any thread count yields the identical
    report.
    """
    if n < 1:
        raise ValueError(f"grid size must be >= 1, got {n}")
    if histogram_cap < 1:
        raise ValueError(f"histogram cap must be >= 1, got {histogram_cap}")
    workers = _resolve_threads(threads)
    blocks = _row_blocks(n, workers * 4)
    if workers == 1 or len(blocks) == 1:
        parts = [_census_rows(i0, i1, n, histogram_cap) for i0, i1 in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_census_rows, i0, i1, n, histogram_cap)
                for i0, i1 in blocks
            ]
            parts = [fut.result() for fut in futures]
    hist = np.zeros(histogram_cap + 2, np.int64)
    for part in parts:
        hist += part
    ones = int(hist[1])
    return DensityReport(
        n=n,
        histogram_cap=histogram_cap,
        ones_count=ones,
        histogram={v: int(hist[v]) for v in range(1, histogram_cap + 1)},
        overflow_count=int(hist[histogram_cap + 1]),
        rho=Fraction(ones, n * n),
    )


def heatmap(n: int) -> HeatmapGrid:
    """The full matrix of f values; O(n^2) memory, meant for figures."""
    if n < 1:
        raise ValueError(f"grid size must be >= 1, got {n}")
    idx = np.arange(1, n + 1, dtype=np.int64)
    g = np.gcd.outer(idx, idx)
    s = np.add.outer(idx, idx) // g
    values = np.gcd(s, g)
    values.setflags(write=False)
    return HeatmapGrid(n=n, values=values)


def local_event_density(p: int, n: int) -> LocalEventEstimate:
    """Exhaustive frequency of [p | gcd(a,b) and p | a'+b'] on [1,n]^2."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise ValueError(f"grid size must be >= 1, got {n}")
    count = int(_local_event_rows(1, n + 1, n, p))
    return LocalEventEstimate(
        p=p,
        n=n,
        event_count=count,
        density=Fraction(count, n * n),
        target=Fraction(1, p * p * (p + 1)),
    )
