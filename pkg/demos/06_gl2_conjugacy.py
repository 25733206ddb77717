#!/usr/bin/env python3
"""phi(n) sigma(n) counts something: conjugacy classes of GL(2, Z/nZ).

Brute force against closed form.  The group of invertible 2x2 matrices
mod n is enumerated outright, partitioned into conjugacy orbits, and
the orbit count lands exactly on phi(n) sigma(n) every time.  The pair
(trace, det) is a conjugation invariant, which ties these classes to
the pairs (i+j, ij) and hence back to the grid map f(i, j).
"""

from gcdkit import (
    build_tables,
    convergence_comparison,
    count_conjugacy_classes,
    density_report,
    enumerate_group,
    prime_power_class_count,
    trace_det_signature,
)
from gcdkit.gl2 import mat_inv, mat_mul

print("brute-force orbit count vs phi(n) sigma(n):")
for n in range(2, 13):
    c = count_conjugacy_classes(n)
    print(f"  n = {n:2d}: |G| = {c.group_order:5d}  brute = {c.class_count_brute:3d}"
          f"  formula = {c.class_count_formula:3d}  match = {c.match}")

print()
print("prime powers have their own closed form p^(2a) - p^(a-1):")
for p, a in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]:
    print(f"  GL(2, Z/{p ** a}Z): {prime_power_class_count(p, a)} classes")

print()
print("(trace, det) is constant on a class: spot check at n = 5")
group = enumerate_group(5)
m = group.elements[17]
sig = trace_det_signature(m)
same = all(
    trace_det_signature(mat_mul(mat_mul(x, m), mat_inv(x))) == sig
    for x in group.elements
)
print(f"  signature {sig} preserved under all {group.order} conjugations: {same}")

print()
print("class-count density phi(n) sigma(n) / n^2 vs the grid density:")
print("(the pointwise column oscillates; its running mean is what converges)")
tables = build_tables(10**5)
rho = {n: density_report(n).rho for n in (10, 100, 1000)}
rows = convergence_comparison([10, 100, 1000, 10**4, 10**5], tables, rho_values=rho)
print(f"  {'n':>7} {'rho_n':>10} {'phi sig/n^2':>12} {'running mean':>13}")
for row in rows:
    rho_text = f"{row.rho_n:.6f}" if row.rho_n is not None else "-"
    print(f"  {row.n:>7} {rho_text:>10} {row.class_count_density:>12.6f}"
          f" {row.cesaro_mean:>13.6f}")
