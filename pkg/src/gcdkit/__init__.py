"""gcdkit: exact computation around f(a,b) = gcd(a+b, ab) / gcd(a,b).

The quotient is always a positive integer and equals gcd((a+b)/g, g)
for g = gcd(a,b).  This package counts how often f = 1 on square
grids, evaluates the limiting density as a truncated Euler product
with a rigorous enclosure, cross-checks the companion identities
(mean of phi sigma / n^2, conjugacy classes of GL(2, Z/nZ), totient
summatory asymptotics), and ships a CLI that emits deterministic
JSON/CSV reports and heat-map images.
"""

from .analytic import (
    EulerProductEstimate,
    MeanValueSeries,
    coprimality_product,
    euler_product,
    local_factor,
    mean_value_series,
    prime_power_f,
)
from .core import (
    GcdDecomposition,
    decompose,
    f,
    f_r,
    gcd,
    is_prime,
    surjectivity_witness,
)
from .density import (
    DensityReport,
    HeatmapGrid,
    LocalEventEstimate,
    density_report,
    heatmap,
    local_event_density,
)
from .gl2 import (
    ConjugacyCount,
    GroupTable,
    Mat2,
    companion_matrix,
    convergence_comparison,
    count_conjugacy_classes,
    enumerate_group,
    prime_power_class_count,
    trace_det_signature,
)
from .sieve import SieveTables, build_tables, mertens_prefix, primes_up_to
from .summatory import (
    MertensCache,
    SummatoryResult,
    coprime_pair_count,
    error_term_report,
    hyperbola_summatory,
    mertens,
    phi_sum_hyperbola,
    phi_sum_sieve,
)

__version__ = "0.1.0"

__all__ = [
    "ConjugacyCount",
    "DensityReport",
    "EulerProductEstimate",
    "GcdDecomposition",
    "GroupTable",
    "HeatmapGrid",
    "LocalEventEstimate",
    "Mat2",
    "MeanValueSeries",
    "MertensCache",
    "SieveTables",
    "SummatoryResult",
    "build_tables",
    "companion_matrix",
    "coprimality_product",
    "coprime_pair_count",
    "convergence_comparison",
    "count_conjugacy_classes",
    "decompose",
    "density_report",
    "enumerate_group",
    "error_term_report",
    "euler_product",
    "f",
    "f_r",
    "gcd",
    "heatmap",
    "hyperbola_summatory",
    "is_prime",
    "local_event_density",
    "local_factor",
    "mean_value_series",
    "mertens",
    "mertens_prefix",
    "phi_sum_hyperbola",
    "phi_sum_sieve",
    "prime_power_class_count",
    "prime_power_f",
    "primes_up_to",
    "surjectivity_witness",
    "trace_det_signature",
]
