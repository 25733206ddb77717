#!/usr/bin/env python3
"""Render the f(a,b) grid as an image.

Writes heatmap50.ppm (binary PPM, fixed palette) and heatmap50.csv
(raw integer values) into the current directory.  The picture shows
white (f = 1) dominating, with colored flecks along structured
diagonals; the first row and column are pure white since f(1, b) = 1.
"""

from gcdkit import density_report, heatmap
from gcdkit.cli import HEATMAP_OVERFLOW_RGB, HEATMAP_PALETTE, emit_heatmap_csv, emit_heatmap_ppm

grid = heatmap(50)

print("palette (value -> RGB):")
for value, rgb in HEATMAP_PALETTE.items():
    print(f"  {value:2d} -> {rgb}")
print(f"  >10 -> {HEATMAP_OVERFLOW_RGB}")

ppm_bytes = emit_heatmap_ppm(grid, "heatmap50.ppm")
csv_bytes = emit_heatmap_csv(grid, "heatmap50.csv")
print()
print(f"wrote heatmap50.ppm ({ppm_bytes} bytes) and heatmap50.csv ({csv_bytes} bytes)")

share = grid.ones_fraction()
print(f"white share of the image: {share} = {float(share):.4f}")
print(f"matches the exact density report: {share == density_report(50).rho}")
