import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats as sps

from tsgof.errors import DegenerateSampleError, DomainError
from tsgof.mathcore import RngStream
from tsgof.statkit import (
    empirical_quantile,
    ols_slope_with_offset,
    shapiro_wilk,
)

# Shapiro & Wilk's original worked example (weights of 11 men); reference
# W and p from R's shapiro.test.
WEIGHTS_1965 = [148, 154, 158, 160, 161, 162, 166, 170, 182, 195, 236]
WEIGHTS_W = 0.78878
WEIGHTS_P = 0.0067


class TestShapiroWilk:
    def test_near_perfect_normal_scores(self):
        n = 20
        sample = sps.norm.ppf((np.arange(1, n + 1) - 0.375) / (n + 0.25))
        assert shapiro_wilk(sample).w >= 0.99

    def test_gross_outlier_rejected(self):
        result = shapiro_wilk([1, 2, 3, 4, 5, 6, 7, 8, 9, 100])
        assert result.p_value < 0.01

    def test_published_reference_values(self):
        result = shapiro_wilk(WEIGHTS_1965)
        assert result.w == pytest.approx(WEIGHTS_W, abs=1e-3)
        assert result.p_value == pytest.approx(WEIGHTS_P, abs=1e-2)

    def test_against_independent_implementation(self):
        gen = RngStream(71, 0).generator
        cases = []
        for n in (3, 4, 5, 6, 11, 12, 25, 100, 500, 2000):
            cases.append(gen.standard_normal(n))
            cases.append(gen.exponential(1.0, n))
            cases.append(gen.uniform(0.0, 1.0, n))
        for sample in cases:
            mine = shapiro_wilk(sample)
            ref = sps.shapiro(sample)
            assert mine.w == pytest.approx(ref.statistic, abs=1e-3)
            assert mine.p_value == pytest.approx(ref.pvalue, abs=1e-2)

    def test_p_uniform_under_null(self):
        gen = RngStream(72, 0).generator
        hits = sum(shapiro_wilk(gen.standard_normal(100)).p_value < 0.05 for _ in range(1000))
        assert abs(hits / 1000 - 0.05) <= 0.02

    def test_location_scale_invariance(self):
        x = RngStream(73, 0).generator.standard_normal(50)
        base = shapiro_wilk(x)
        assert shapiro_wilk(2.0 * x).w == base.w  # power-of-two scale is exact in fp
        shifted = shapiro_wilk(3.7 * x + 11.0)
        assert shifted.w == pytest.approx(base.w, rel=1e-12)

    def test_constant_sample(self):
        with pytest.raises(DegenerateSampleError):
            shapiro_wilk([2.0] * 10)

    @pytest.mark.parametrize("n", [2, 5001])
    def test_size_bounds(self, n):
        with pytest.raises(DomainError):
            shapiro_wilk(np.arange(n, dtype=float))

    def test_exact_small_sample_branch(self):
        result = shapiro_wilk([1.0, 2.0, 10.0])
        ref = sps.shapiro([1.0, 2.0, 10.0])
        assert result.w == pytest.approx(ref.statistic, abs=1e-3)
        assert result.p_value == pytest.approx(ref.pvalue, abs=1e-2)


class TestEmpiricalQuantile:
    def test_median_of_ten(self):
        assert empirical_quantile(range(1, 11), 0.5) == 5.5

    def test_upper_tail_of_ten(self):
        assert empirical_quantile(range(1, 11), 0.95) == pytest.approx(9.55, rel=1e-14)

    def test_repeated_value(self):
        for level in (0.01, 0.5, 0.99):
            assert empirical_quantile([7.0] * 5, level) == 7.0

    def test_matches_numpy_linear_rule(self):
        gen = RngStream(74, 0).generator
        values = gen.standard_normal(200)
        for level in (0.05, 0.31, 0.5, 0.9, 0.95, 0.975):
            assert empirical_quantile(values, level) == pytest.approx(
                float(np.quantile(values, level)), rel=1e-15
            )

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.floats(-100, 100), min_size=2, max_size=40),
        st.floats(0.01, 0.99),
        st.floats(0.02, 0.98),
    )
    def test_monotone_in_level(self, values, l1, l2):
        lo, hi = sorted((l1, l2))
        assert empirical_quantile(values, lo) <= empirical_quantile(values, hi)

    def test_affine_equivariance(self):
        values = RngStream(75, 0).generator.standard_normal(50)
        for level in (0.1, 0.5, 0.9):
            lhs = empirical_quantile(3.0 * values + 2.0, level)
            rhs = 3.0 * empirical_quantile(values, level) + 2.0
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_errors(self):
        with pytest.raises(DomainError):
            empirical_quantile([], 0.5)
        with pytest.raises(DomainError):
            empirical_quantile([1.0], 0.0)
        with pytest.raises(DomainError):
            empirical_quantile([1.0], 1.0)


class TestOlsSlopeWithOffset:
    def test_root_n_decay_gives_zero_slope(self):
        ns = np.array([500.0, 1000.0, 2000.0, 5000.0])
        fit = ols_slope_with_offset(ns, ns ** -0.5)
        assert fit.slope == pytest.approx(0.0, abs=1e-12)
        assert fit.intercept == pytest.approx(0.0, abs=1e-12)

    def test_offset_algebra(self):
        ns = np.array([500.0, 1000.0, 2000.0, 5000.0])
        fit = ols_slope_with_offset(ns, 3.0 * ns ** -0.4)
        assert fit.slope == pytest.approx(0.1, abs=1e-10)
        assert fit.intercept == pytest.approx(math.log(3.0), abs=1e-10)

    def test_noiseless_recovery_and_normal_equations(self):
        gen = RngStream(76, 0).generator
        ns = np.array([300.0, 700.0, 1500.0, 2500.0, 6000.0])
        alpha, beta = -1.3, 0.07
        values = np.exp(alpha + beta * np.log(ns) - 0.5 * np.log(ns))
        fit = ols_slope_with_offset(ns, values)
        assert fit.slope == pytest.approx(beta, abs=1e-10)
        assert fit.intercept == pytest.approx(alpha, abs=1e-10)
        assert fit.residual_stderr == pytest.approx(0.0, abs=1e-10)
        # residual orthogonality on a noisy fit
        noisy = values * np.exp(gen.standard_normal(5) * 0.1)
        noisy_fit = ols_slope_with_offset(ns, noisy)
        x = np.log(ns)
        resid = np.log(noisy) + 0.5 * x - (noisy_fit.intercept + noisy_fit.slope * x)
        assert abs(resid.sum()) <= 1e-10
        assert abs((resid * x).sum()) <= 1e-10

    def test_errors(self):
        with pytest.raises(DomainError):
            ols_slope_with_offset([100.0, 200.0], [1.0, 2.0])
        with pytest.raises(DomainError):
            ols_slope_with_offset([100.0, 200.0, 100.0], [1.0, 2.0, 1.0])
        with pytest.raises(DomainError):
            ols_slope_with_offset([100.0, 200.0, 400.0], [1.0, -2.0, 1.0])
