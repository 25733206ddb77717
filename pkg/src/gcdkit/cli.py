"""Command-line front end; every subcommand prints a schema-versioned report.

Reports are deterministic: exact integer counts plus decimal strings
rendered by integer arithmetic, JSON keys sorted.  Identical arguments
give byte-identical output, whatever the thread count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from . import analytic, density, gl2, summatory
from .core import f, surjectivity_witness
from .fmt import decimal_str
from .sieve import build_tables

__all__ = [
    "HEATMAP_PALETTE",
    "HEATMAP_OVERFLOW_RGB",
    "RunConfig",
    "emit_heatmap_csv",
    "emit_heatmap_ppm",
    "load_report_schema",
    "main",
    "read_heatmap_csv",
]

SCHEMA_VERSION = 1

# Fixed heat-map palette, one RGB triple per value class: 1 white, 2..3
# blue tints, 4..5 green tints, 6 orange, 7 red, 8 purple, 9 cyan,
# 10 gray.  Tints are base colors mixed toward white at round numbers;
# the exact triples below are the contract for byte-stable images.
HEATMAP_PALETTE = {
    1: (255, 255, 255),
    2: (204, 204, 255),
    3: (153, 153, 255),
    4: (204, 255, 204),
    5: (153, 255, 153),
    6: (255, 217, 179),
    7: (255, 179, 179),
    8: (217, 179, 217),
    9: (179, 255, 255),
    10: (153, 153, 153),
}
# Everything above 10 lumps into one light gray.
HEATMAP_OVERFLOW_RGB = (230, 230, 230)


@dataclass(frozen=True)
class RunConfig:
    """A validated CLI invocation: subcommand plus its parameters."""

    subcommand: str
    params: dict
    threads: int | None = None
    output_format: str = "json"
    output_path: str | None = None
    file_format: str = "ppm"


def load_report_schema() -> dict:
    """The JSON schema every stdout report validates against."""
    text = resources.files("gcdkit.schemas").joinpath("report.schema.json").read_text()
    return json.loads(text)


# ---------------------------------------------------------------------------
# heat-map emitters


def _heatmap_rgb(grid: density.HeatmapGrid) -> bytes:
    lut = np.empty((12, 3), dtype=np.uint8)
    for v in range(1, 11):
        lut[v] = HEATMAP_PALETTE[v]
    lut[11] = HEATMAP_OVERFLOW_RGB
    lut[0] = (0, 0, 0)  # unreachable: f >= 1
    idx = np.minimum(grid.values, 11)
    return lut[idx].tobytes()


def emit_heatmap_ppm(grid: density.HeatmapGrid, path: str) -> int:
    """Write the grid as binary PPM (P6), row i=1 at the top.

    Returns the number of bytes written; identical grids always produce
    identical bytes.
    """
    header = f"P6\n{grid.n} {grid.n}\n255\n".encode("ascii")
    payload = header + _heatmap_rgb(grid)
    with open(path, "wb") as fh:
        fh.write(payload)
    return len(payload)


def emit_heatmap_csv(grid: density.HeatmapGrid, path: str) -> int:
    """Write raw f values row-major; header row holds the column index j."""
    buf = io.StringIO()
    buf.write(",".join(str(j) for j in range(1, grid.n + 1)))
    buf.write("\n")
    for row in grid.values:
        buf.write(",".join(str(int(v)) for v in row))
        buf.write("\n")
    data = buf.getvalue()
    with open(path, "w", newline="\n") as fh:
        fh.write(data)
    return len(data)


def read_heatmap_csv(path: str) -> density.HeatmapGrid:
    """Parse a file written by emit_heatmap_csv back into a grid."""
    with open(path) as fh:
        header = fh.readline().strip()
        n = len(header.split(","))
        values = np.loadtxt(fh, delimiter=",", dtype=np.int64, ndmin=2)
    if values.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} grid, got shape {values.shape}")
    values.setflags(write=False)
    return density.HeatmapGrid(n=n, values=values)


# ---------------------------------------------------------------------------
# report payloads


def _fraction_dict(fr: Fraction) -> dict:
    return {
        "numerator": fr.numerator,
        "denominator": fr.denominator,
        "decimal": decimal_str(fr.numerator, fr.denominator, 6),
    }


def _run_density(config: RunConfig) -> dict:
    n = config.params["n"]
    cap = config.params["histogram_cap"]
    report = density.density_report(n, histogram_cap=cap, threads=config.threads)
    histogram = {str(v): c for v, c in report.histogram.items()}
    histogram[f">{cap}"] = report.overflow_count
    return {
        "parameters": {"n": n, "histogram_cap": cap},
        "result": {
            "ones_count": report.ones_count,
            "total_pairs": report.total_pairs,
            "rho": _fraction_dict(report.rho),
            "histogram": histogram,
        },
    }


def _run_heatmap(config: RunConfig) -> dict:
    n = config.params["n"]
    grid = density.heatmap(n)
    if config.file_format == "ppm":
        nbytes = emit_heatmap_ppm(grid, config.output_path)
    else:
        nbytes = emit_heatmap_csv(grid, config.output_path)
    ones = int((grid.values == 1).sum())
    return {
        "parameters": {"n": n, "format": config.file_format, "out": config.output_path},
        "result": {
            "ones_count": ones,
            "total_pairs": n * n,
            "rho": _fraction_dict(Fraction(ones, n * n)),
            "bytes_written": nbytes,
        },
    }


def _run_local(config: RunConfig) -> dict:
    est = density.local_event_density(config.params["p"], config.params["n"])
    diff = abs(est.density - est.target)
    return {
        "parameters": {"p": est.p, "n": est.n},
        "result": {
            "event_count": est.event_count,
            "density": _fraction_dict(est.density),
            "target": _fraction_dict(est.target),
            "abs_difference": decimal_str(diff.numerator, diff.denominator, 12),
        },
    }


def _run_euler(config: RunConfig) -> dict:
    prime_limit = config.params["prime_limit"]
    if config.params["coprimality"]:
        est = analytic.coprimality_product(prime_limit)
        factor = "1 - 1/p^2"
    else:
        est = analytic.euler_product(prime_limit)
        factor = "1 - 1/(p^2*(p+1))"
    return {
        "parameters": {"kind": est.kind, "prime_limit": prime_limit},
        "result": {
            "factor": factor,
            "value": f"{float(est.value):.12f}",
            "tail_bound": f"{float(est.tail_bound):.3e}",
            "lower": f"{float(est.lower):.12f}",
            "upper": f"{float(est.upper):.12f}",
        },
    }


def _run_mean(config: RunConfig) -> dict:
    n = config.params["n"]
    checkpoints = config.params["checkpoints"]
    if checkpoints is None:
        checkpoints = [10**k for k in range(1, len(str(n)))]
        checkpoints = [c for c in checkpoints if c <= n] + [n]
    tables = build_tables(n)
    series = analytic.mean_value_series(tables, checkpoints)
    return {
        "parameters": {"n": n, "checkpoints": [c for c, _ in series.checkpoints]},
        "result": {
            "partial_means": [
                {"n": c, "mean": f"{m:.12f}"} for c, m in series.checkpoints
            ],
            "final": f"{series.final:.12f}",
        },
    }


def _run_gl2(config: RunConfig) -> dict:
    n = config.params["n"]
    force = config.params["force"]
    count = gl2.count_conjugacy_classes(n, force=force)
    return {
        "parameters": {"n": n, "force": force},
        "result": {
            "group_order": count.group_order,
            "class_count_brute": count.class_count_brute,
            "class_count_formula": count.class_count_formula,
            "match": count.match,
        },
    }


def _summatory_dict(res: summatory.SummatoryResult) -> dict:
    return {
        "method": res.method,
        "phi_sum": res.phi_sum,
        "main_term": f"{res.main_term:.6f}",
        "abs_error": f"{res.abs_error:.6f}",
        "normalized_error": f"{res.normalized_error:.12f}",
    }


def _run_totient_sum(config: RunConfig) -> dict:
    x = config.params["x"]
    method = config.params["method"]
    results = []
    if method in ("sieve", "both"):
        results.append(summatory.phi_sum_sieve(x, build_tables(x)))
    if method in ("hyperbola", "both"):
        results.append(summatory.phi_sum_hyperbola(x))
    agree = results[0].phi_sum == results[1].phi_sum if len(results) == 2 else None
    return {
        "parameters": {"x": x, "method": method},
        "result": {
            "results": [_summatory_dict(r) for r in results],
            "methods_agree": agree,
        },
    }


def _run_coprime(config: RunConfig) -> dict:
    n = config.params["n"]
    count = summatory.coprime_pair_count(n)
    return {
        "parameters": {"n": n},
        "result": {
            "coprime_pairs": count,
            "total_pairs": n * n,
            "density": _fraction_dict(Fraction(count, n * n)),
            "limit_value": f"{6 / math.pi**2:.12f}",
        },
    }


def _run_witness(config: RunConfig) -> dict:
    c_max = config.params["c_max"]
    if c_max < 2:
        raise ValueError(f"--c-max must be >= 2, got {c_max}")
    failures = []
    for c in range(2, c_max + 1):
        a, b = surjectivity_witness(c)
        if f(a, b) != c:
            failures.append(c)
    return {
        "parameters": {"c_max": c_max},
        "result": {
            "checked": c_max - 1,
            "all_match": not failures,
            "failures": failures,
        },
    }


_RUNNERS = {
    "density": _run_density,
    "heatmap": _run_heatmap,
    "local": _run_local,
    "euler": _run_euler,
    "mean": _run_mean,
    "gl2": _run_gl2,
    "totient-sum": _run_totient_sum,
    "coprime": _run_coprime,
    "witness": _run_witness,
}


# ---------------------------------------------------------------------------
# rendering and argument wiring


def _render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _flatten(prefix: str, obj, rows: list) -> None:
    if isinstance(obj, dict):
        for key in sorted(obj, key=str):
            _flatten(f"{prefix}.{key}" if prefix else str(key), obj[key], rows)
    elif isinstance(obj, list):
        for i, item in enumerate(obj):
            _flatten(f"{prefix}[{i}]", item, rows)
    else:
        rows.append((prefix, obj))


def _render_csv(payload: dict) -> str:
    rows: list = []
    _flatten("", payload, rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in rows:
        writer.writerow([key, value])
    return buf.getvalue()


def _positive(name):
    def parse(text):
        value = int(text)
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be a positive integer")
        return value

    return parse


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcdkit",
        description=(
            "Exact computation around f(a,b) = gcd(a+b, ab)/gcd(a,b): grid "
            "densities, Euler products, GL(2, Z/nZ) class counts, and "
            "totient summatory checks."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def output_options(sp, out_required=False, out_help="write the report to this path"):
        sp.add_argument(
            "--output-format", choices=("json", "csv"), default="json",
            help="stdout report format (default json)",
        )
        sp.add_argument("--out", required=out_required, help=out_help)

    sp = sub.add_parser("density", help="exact census of f over [1,n]^2")
    sp.add_argument("--n", type=_positive("--n"), required=True)
    sp.add_argument("--histogram-cap", type=_positive("--histogram-cap"), default=10)
    sp.add_argument(
        "--threads", type=int, default=0,
        help="worker threads; 0 = all cores (results are identical either way)",
    )
    output_options(sp)

    sp = sub.add_parser("heatmap", help="write the f-value grid as PPM or CSV")
    sp.add_argument("--n", type=_positive("--n"), required=True)
    sp.add_argument("--format", choices=("ppm", "csv"), default="ppm",
                    help="image file format (default ppm)")
    output_options(sp, out_required=True, out_help="image file path (required)")

    sp = sub.add_parser("local", help="frequency of one prime's alignment event")
    sp.add_argument("--p", type=_positive("--p"), required=True, help="a prime")
    sp.add_argument("--n", type=_positive("--n"), required=True)
    output_options(sp)

    sp = sub.add_parser("euler", help="truncated Euler product with enclosure")
    sp.add_argument("--prime-limit", type=_positive("--prime-limit"), default=100_000)
    sp.add_argument(
        "--coprimality", action="store_true",
        help="use the coprimality factors 1 - 1/p^2 instead of 1 - 1/(p^2(p+1))",
    )
    output_options(sp)

    sp = sub.add_parser("mean", help="running mean of phi(n) sigma(n)/n^2")
    sp.add_argument("--n", type=_positive("--n"), required=True)
    sp.add_argument("--checkpoints", type=_positive("--checkpoints"), nargs="+",
                    default=None, help="sample points (default: decades up to n)")
    output_options(sp)

    sp = sub.add_parser("gl2", help="conjugacy classes of GL(2, Z/nZ), brute vs formula")
    sp.add_argument("--n", type=_positive("--n"), required=True)
    sp.add_argument("--force", action="store_true",
                    help="enumerate past the cap of 12 (cost grows like n^8)")
    output_options(sp)

    sp = sub.add_parser("totient-sum", help="Phi(x) by sieve and/or hyperbola")
    sp.add_argument("--x", type=_positive("--x"), required=True)
    sp.add_argument("--method", choices=("sieve", "hyperbola", "both"), default="both")
    output_options(sp)

    sp = sub.add_parser("coprime", help="exact coprime-pair count on [1,n]^2")
    sp.add_argument("--n", type=_positive("--n"), required=True)
    output_options(sp)

    sp = sub.add_parser("witness", help="verify f(c, c^2-c) = c for 2 <= c <= c-max")
    sp.add_argument("--c-max", type=_positive("--c-max"), required=True)
    output_options(sp)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {
        key: value
        for key, value in vars(args).items()
        if key not in ("subcommand", "output_format", "out", "threads", "format")
    }
    threads = getattr(args, "threads", None)
    if threads is not None and threads < 0:
        raise ValueError(f"--threads must be >= 0, got {threads}")
    return RunConfig(
        subcommand=args.subcommand,
        params=params,
        threads=(threads or None),
        output_format=args.output_format,
        output_path=args.out,
        file_format=getattr(args, "format", "ppm"),
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        body = _RUNNERS[config.subcommand](config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    payload = {
        "schema_version": SCHEMA_VERSION,
        "subcommand": config.subcommand,
        **body,
    }
    text = _render_json(payload) if config.output_format == "json" else _render_csv(payload)
    if config.output_path and config.subcommand != "heatmap":
        try:
            with open(config.output_path, "w", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
