import math
from fractions import Fraction

import numpy as np
import pytest
from mpmath import mp, mpf

from gcdkit import (
    build_tables,
    coprimality_product,
    euler_product,
    local_factor,
    mean_value_series,
    prime_power_f,
)


def assert_mpf_close(x, fr: Fraction, tol=1e-30):
    with mp.workdps(50):
        diff = abs(x - mpf(fr.numerator) / fr.denominator)
        assert diff < tol


class TestLocalFactor:
    def test_exact_small_primes(self):
        assert_mpf_close(local_factor(2), Fraction(11, 12))
        assert_mpf_close(local_factor(3), Fraction(35, 36))
        assert_mpf_close(local_factor(5), Fraction(149, 150))

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            local_factor(6)


class TestEulerProduct:
    def test_single_factor(self):
        est = euler_product(2)
        assert_mpf_close(est.value, Fraction(11, 12))

    def test_two_factors(self):
        est = euler_product(3)
        assert_mpf_close(est.value, Fraction(385, 432))

    def test_enclosure_structure(self):
        est = euler_product(1000)
        assert est.lower <= est.value == est.upper
        assert 0 < est.tail_bound <= mpf(1) / 1000**2

    def test_nested_intervals(self):
        estimates = [euler_product(p) for p in (10**3, 10**4, 10**5)]
        for coarse, fine in zip(estimates, estimates[1:]):
            assert coarse.lower <= fine.lower
            assert fine.upper <= coarse.upper

    def test_value_strictly_decreasing(self):
        values = [euler_product(p).value for p in (2, 3, 5, 100, 1000)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_refined_value_stays_inside_coarse_enclosures(self):
        target = euler_product(10**6).value
        for limit in (10, 10**2, 10**3, 10**4, 10**5):
            est = euler_product(limit)
            assert est.contains(target)

    def test_bad_limit(self):
        with pytest.raises(ValueError):
            euler_product(1)


class TestCoprimalityProduct:
    def test_small_truncations(self):
        assert_mpf_close(coprimality_product(2).value, Fraction(3, 4))
        assert_mpf_close(coprimality_product(3).value, Fraction(2, 3))

    def test_converges_to_six_over_pi_squared(self):
        est = coprimality_product(10**5)
        assert abs(float(est.value) - 6 / math.pi**2) < 1e-5
        assert est.contains(6 / math.pi**2)

    def test_kind_field(self):
        assert coprimality_product(10).kind == "coprimality"
        assert euler_product(10).kind == "interaction-density"


class TestPrimePowerTerm:
    def test_examples(self):
        assert prime_power_f(2, 1) == Fraction(3, 4)
        assert prime_power_f(3, 2) == Fraction(26, 27)
        assert prime_power_f(7, 0) == 1

    def test_closed_form(self):
        # definition phi(p^k) sigma(p^k) / p^(2k) collapses to 1 - p^-(k+1)
        for p in (2, 3, 5, 7, 11, 13):
            for k in range(0, 9):
                expected = 1 - Fraction(1, p ** (k + 1)) if k else Fraction(1)
                assert prime_power_f(p, k) == expected

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            prime_power_f(8, 2)


class TestPerPrimeSeries:
    def test_series_identity_and_local_factor(self):
        # sum_k f(p^k)/p^k = p/(p-1) - 1/(p^3 - p); times (1 - 1/p) this
        # is the Euler factor.  64 terms push the truncation error below
        # 1e-12 even at p = 2.
        for p in (2, 3, 5, 7, 11, 13):
            series = math.fsum(
                float(prime_power_f(p, k)) / p**k for k in range(64)
            )
            closed = p / (p - 1) - 1 / (p**3 - p)
            assert abs(series - closed) < 1e-12
            assert abs(series * (1 - 1 / p) - float(local_factor(p))) < 1e-12


class TestMeanValueSeries:
    def test_trivial_checkpoint(self):
        series = mean_value_series(build_tables(10), [1])
        assert series.final == 1.0

    def test_first_four_terms(self):
        series = mean_value_series(build_tables(10), [4])
        assert abs(series.final - 253 / 288) < 1e-14

    def test_checkpoints_are_running_means(self, tables_1m):
        series = mean_value_series(tables_1m, [10, 100, 1000])
        assert [c for c, _ in series.checkpoints] == [10, 100, 1000]
        lone = mean_value_series(tables_1m, [100]).final
        assert abs(dict(series.checkpoints)[100] - lone) < 1e-15

    def test_all_terms_at_most_one(self, tables_1m):
        series = mean_value_series(tables_1m, [10**3, 10**5, 10**6])
        for _, mean in series.checkpoints:
            assert 0 < mean <= 1

    def test_converges_to_euler_product(self, tables_1m):
        series = mean_value_series(tables_1m, [10**6])
        assert abs(series.final - float(euler_product(10**5).value)) < 1e-4

    def test_term_multiplicativity(self, tables_1m):
        # phi sigma (mn) = phi sigma (m) phi sigma (n) for coprime m, n
        # (exact integer identity; equivalent to multiplicativity of the
        # normalized terms since the denominators multiply as well)
        prod = tables_1m.phi * tables_1m.sigma
        m = np.arange(1, 1001, dtype=np.int64)
        coprime = np.gcd.outer(m, m) == 1
        outer_vals = prod[np.multiply.outer(m, m)]
        outer_split = np.multiply.outer(prod[m], prod[m])
        assert np.array_equal(outer_vals[coprime], outer_split[coprime])

    def test_bad_checkpoints(self, tables_10k):
        with pytest.raises(ValueError):
            mean_value_series(tables_10k, [])
        with pytest.raises(ValueError):
            mean_value_series(tables_10k, [10**5])
        with pytest.raises(ValueError):
            mean_value_series(tables_10k, [0])
