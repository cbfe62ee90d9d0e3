import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from scatentropy.numerics import (
    QuadratureError,
    QuadratureSpec,
    bose_log_term,
    central_difference,
    fit_log_linear,
    g_kernel,
    g_kernel_derivative,
    g_small_expansion,
    integrate_panels,
    integrate_semi_infinite,
)

mpmath.mp.dps = 40


def g_mp(x):
    x = mpmath.mpf(x)
    return float(x / mpmath.expm1(x) - mpmath.log1p(-mpmath.exp(-x)))


class TestKernels:
    def test_g_at_one(self):
        assert_allclose(g_kernel(1.0), 1.0406518522564083, rtol=1e-14)

    @pytest.mark.parametrize("x", [1e-12, 1e-6, 1e-3, 0.1, 1.0, 5.0, 30.0, 300.0, 690.0])
    def test_g_against_mpmath(self, x):
        assert_allclose(g_kernel(x), g_mp(x), rtol=1e-13)

    def test_g_large_argument_is_zero(self):
        assert g_kernel(701.0) == 0.0
        assert g_kernel(1e6) == 0.0

    def test_g_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            g_kernel(0.0)
        with pytest.raises(ValueError):
            g_kernel(np.array([1.0, -1.0]))

    def test_bose_log_term_small_x(self):
        # ln(1 - e^{-x}) ~ ln x - x/2 for small x
        x = 1e-10
        assert_allclose(bose_log_term(x), np.log(x) - x / 2, rtol=1e-14)

    def test_bose_log_term_rejects_zero(self):
        with pytest.raises(ValueError):
            bose_log_term(0.0)

    @given(st.floats(min_value=1e-6, max_value=600.0))
    def test_g_positive_and_decreasing(self, x):
        assert g_kernel(x) > 0
        assert g_kernel_derivative(x) < 0

    @pytest.mark.parametrize("x", [1e-3, 0.3, 2.0, 20.0])
    def test_g_derivative_matches_difference(self, x):
        num = central_difference(lambda y: float(g_kernel(y)), x, 1e-2 * min(x, 1.0))
        assert_allclose(g_kernel_derivative(x), num, rtol=1e-8)

    def test_small_expansion(self):
        # the O(x) term cancels; next correction is x^2/24
        for x in [1e-2, 1e-3]:
            assert_allclose(g_kernel(x) - g_small_expansion(x), x**2 / 24, rtol=1e-2)


class TestQuadrature:
    def test_polynomial_exact(self):
        res = integrate_panels(lambda x: x**5 - 3 * x**2, 0.0, 2.0)
        assert_allclose(res.value, 64 / 6 - 8, rtol=1e-14)

    def test_oscillatory_with_panel_hint(self):
        spec = QuadratureSpec(panel_width_hint=np.pi)
        res = integrate_panels(lambda x: np.sin(x) ** 2, 0.0, 100 * np.pi, spec)
        assert_allclose(res.value, 50 * np.pi, rtol=1e-12)

    def test_log_singularity(self):
        res = integrate_panels(np.log, 0.0, 1.0)
        assert_allclose(res.value, -1.0, rtol=1e-9)

    def test_reproducible(self):
        f = lambda x: np.exp(-x) * np.cos(3 * x)  # noqa: E731
        a = integrate_panels(f, 0.0, 10.0)
        b = integrate_panels(f, 0.0, 10.0)
        assert a.value == b.value

    def test_non_convergence_raises(self):
        spec = QuadratureSpec(rel_tol=1e-13, abs_tol=1e-300, max_subdivisions=2)
        with pytest.raises(QuadratureError) as err:
            integrate_panels(lambda x: 1 / np.sqrt(x), 0.0, 1.0, spec)
        assert np.isfinite(err.value.value)

    def test_semi_infinite_with_tail_bound(self):
        res = integrate_semi_infinite(lambda x: np.exp(-x), tail_bound=lambda w: np.exp(-w))
        assert_allclose(res.value, 1.0, rtol=1e-10)

    def test_semi_infinite_doubling(self):
        res = integrate_semi_infinite(lambda x: 1 / (1 + x**2), QuadratureSpec(rel_tol=1e-7, abs_tol=1e-9))
        assert_allclose(res.value, np.pi / 2, rtol=1e-4)

    def test_g_moment(self):
        # int_0^inf g(x) dx = pi^2/3
        res = integrate_semi_infinite(g_kernel, tail_bound=lambda w: (w + 2) * np.exp(-w) * 2)
        assert_allclose(res.value, np.pi**2 / 3, rtol=1e-9)


class TestDifferenceAndFit:
    def test_central_difference_accuracy(self):
        assert_allclose(central_difference(np.sin, 0.7, 1e-2), np.cos(0.7), rtol=1e-12)

    def test_central_difference_bad_step(self):
        with pytest.raises(ValueError):
            central_difference(np.sin, 0.0, 0.0)

    @settings(max_examples=30)
    @given(st.floats(-3, 3), st.floats(-10, 10))
    def test_fit_recovers_line(self, a, b):
        T = np.geomspace(1.0, 1e4, 12)
        fit = fit_log_linear(zip(T, a * np.log(T) + b))
        assert_allclose([fit.a, fit.b], [a, b], atol=1e-9)
        assert fit.n_samples == 12

    def test_fit_needs_samples(self):
        with pytest.raises(ValueError):
            fit_log_linear([(1, 0), (2, 1), (3, 2)])
        with pytest.raises(ValueError):
            fit_log_linear([(2.0, 0.0)] * 5)
