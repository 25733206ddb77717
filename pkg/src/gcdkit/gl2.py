"""Conjugacy classes of GL(2, Z/nZ) by exhaustive orbit partition.

The group is enumerated outright: all 2x2 matrices mod n whose
determinant is a unit, inverses precomputed via the adjugate.  Classes
come from expanding the orbit {x g x^-1 : x in G} of each not-yet-seen
element; the total cost is (number of classes) * |G| conjugations,
comfortably small at the default cap n <= 12 where |G| <= 13200.  The
closed-form count phi(n) sigma(n) is carried alongside as the value to
check the brute force against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from . import analytic
from .core import is_prime
from .sieve import SieveTables, build_tables

__all__ = [
    "ConjugacyCount",
    "ComparisonRow",
    "ENUMERATION_CAP",
    "GroupTable",
    "Mat2",
    "companion_matrix",
    "convergence_comparison",
    "count_conjugacy_classes",
    "enumerate_group",
    "mat_inv",
    "mat_mul",
    "prime_power_class_count",
    "trace_det_signature",
]

# |GL(2, Z/nZ)| grows like n^4; the O(classes * |G|) orbit scan stays
# in seconds up to here.
ENUMERATION_CAP = 12


class Mat2(NamedTuple):
    """2x2 matrix [[a, b], [c, d]] over Z/modulus, determinant a unit."""

    a: int
    b: int
    c: int
    d: int
    modulus: int


@dataclass(frozen=True)
class GroupTable:
    """All elements of GL(2, Z/nZ) with matching precomputed inverses."""

    modulus: int
    elements: list[Mat2]
    inverses: list[Mat2]

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ConjugacyCount:
    """Brute-force class count next to the closed form phi(n) sigma(n)."""

    modulus: int
    group_order: int
    class_count_brute: int
    class_count_formula: int
    orbit_sizes: tuple[int, ...]

    @property
    def match(self) -> bool:
        return self.class_count_brute == self.class_count_formula


@dataclass(frozen=True)
class ComparisonRow:
    """One n in the side-by-side of grid density vs class-count density.

    class_count_density = phi(n) sigma(n) / n^2 oscillates with n (it
    is ~1 at primes); its running mean cesaro_mean is what converges to
    the limiting grid density.  rho_n is filled when a density report
    was supplied for this n.
    """

    n: int
    rho_n: float | None
    class_count_density: float
    cesaro_mean: float


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if x.modulus != y.modulus:
        raise ValueError("matrices live over different moduli")
    n = x.modulus
    return Mat2(
        (x.a * y.a + x.b * y.c) % n,
        (x.a * y.b + x.b * y.d) % n,
        (x.c * y.a + x.d * y.c) % n,
        (x.c * y.b + x.d * y.d) % n,
        n,
    )


def mat_inv(m: Mat2) -> Mat2:
    """Inverse via the adjugate; requires det to be a unit mod modulus."""
    n = m.modulus
    det = (m.a * m.d - m.b * m.c) % n
    di = pow(det, -1, n)
    return Mat2((m.d * di) % n, (-m.b * di) % n, (-m.c * di) % n, (m.a * di) % n, n)


def trace_det_signature(m: Mat2) -> tuple[int, int]:
    """(trace, det) mod modulus; invariant under conjugation."""
    n = m.modulus
    return ((m.a + m.d) % n, (m.a * m.d - m.b * m.c) % n)


def companion_matrix(t: int, d: int, n: int) -> Mat2:
    """The matrix [[0, -d], [1, t]] realizing x^2 - t x + d mod n."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return Mat2(0, (-d) % n, 1 % n, t % n, n)


def enumerate_group(n: int, force: bool = False) -> GroupTable:
    """All matrices of GL(2, Z/nZ), each with its inverse.

    Scans n^4 candidate matrices, so n above ENUMERATION_CAP is refused
    unless force=True.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if n > ENUMERATION_CAP and not force:
        raise ValueError(
            f"modulus {n} exceeds the enumeration cap {ENUMERATION_CAP} "
            f"(|GL(2, Z/nZ)| ~ n^4); pass force=True to accept the cost"
        )
    elements: list[Mat2] = []
    inverses: list[Mat2] = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        det = (a * d - b * c) % n
        if math.gcd(det, n) != 1:
            continue
        di = pow(det, -1, n)
        elements.append(Mat2(a, b, c, d, n))
        inverses.append(Mat2((d * di) % n, (-b * di) % n, (-c * di) % n, (a * di) % n, n))
    return GroupTable(modulus=n, elements=elements, inverses=inverses)


def count_conjugacy_classes(
    n: int, force: bool = False, tables: SieveTables | None = None
) -> ConjugacyCount:
    """Partition GL(2, Z/nZ) into conjugacy orbits and count them.

    The seen-set is a flat bytearray over packed (a,b,c,d) codes; each
    unseen seed is conjugated by every group element.  Deterministic:
    seeds are visited in enumeration order.
    """
    group = enumerate_group(n, force=force)
    els = [(m.a, m.b, m.c, m.d) for m in group.elements]
    invs = [(m.a, m.b, m.c, m.d) for m in group.inverses]
    pairs = list(zip(els, invs))
    seen = bytearray(n**4)
    n2, n3 = n * n, n * n * n
    orbit_sizes: list[int] = []
    for ma, mb, mc, md in els:
        if seen[ma * n3 + mb * n2 + mc * n + md]:
            continue
        size = 0
        for (xa, xb, xc, xd), (ya, yb, yc, yd) in pairs:
            # u = x m x^-1; intermediates stay far below 2^63, one mod
            # per entry at the end
            ta = xa * ma + xb * mc
            tb = xa * mb + xb * md
            tc = xc * ma + xd * mc
            td = xc * mb + xd * md
            ua = (ta * ya + tb * yc) % n
            ub = (ta * yb + tb * yd) % n
            uc = (tc * ya + td * yc) % n
            ud = (tc * yb + td * yd) % n
            code = ua * n3 + ub * n2 + uc * n + ud
            if not seen[code]:
                seen[code] = 1
                size += 1
        orbit_sizes.append(size)
    if tables is None or tables.limit < n:
        tables = build_tables(n)
    formula = int(tables.phi[n]) * int(tables.sigma[n])
    return ConjugacyCount(
        modulus=n,
        group_order=group.order,
        class_count_brute=len(orbit_sizes),
        class_count_formula=formula,
        orbit_sizes=tuple(orbit_sizes),
    )


def prime_power_class_count(p: int, alpha: int) -> int:
    """Class count of GL(2, Z/p^alpha) in closed form: p^(2a) - p^(a-1)."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    return p ** (2 * alpha) - p ** (alpha - 1)


def convergence_comparison(
    n_values: Sequence[int],
    tables: SieveTables,
    rho_values: Mapping[int, float] | None = None,
) -> list[ComparisonRow]:
    """Tabulate rho_n, phi(n) sigma(n)/n^2, and the running mean of the
    latter, for eyeballing which of the two tracks the grid density.

    rho_values optionally supplies exact grid densities (from
    density_report) for some of the n.
    """
    ns = sorted(set(int(v) for v in n_values))
    if not ns:
        raise ValueError("at least one n is required")
    if ns[0] < 1 or ns[-1] > tables.limit:
        raise ValueError(f"n values must lie in [1, {tables.limit}]")
    series = analytic.mean_value_series(tables, ns)
    cesaro = dict(series.checkpoints)
    rows = []
    for n in ns:
        rho = rho_values.get(n) if rho_values else None
        rows.append(
            ComparisonRow(
                n=n,
                rho_n=None if rho is None else float(rho),
                class_count_density=int(tables.phi[n]) * int(tables.sigma[n]) / n**2,
                cesaro_mean=cesaro[n],
            )
        )
    return rows
