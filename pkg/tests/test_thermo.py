import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.integrate import quad

from scatentropy.models import DeltaPotentialParams, DomainError, PlasmaPointParams, make_spectral_model, trivial_model
from scatentropy.numerics import central_difference
from scatentropy.thermo import (
    ThermoSample,
    delta_entropy_asymptote,
    entropy,
    entropy_high_T,
    free_energy,
    high_temperature_form,
    plasma_entropy_limit,
    plasma_entropy_limit_integral,
    temperature_grid,
    thermo_sweep,
)


def g_ref(x):
    e = np.exp(-x)
    return x * e / -np.expm1(-x) - np.log1p(-e)


def delta_entropy_quad(alpha, mu, T):
    """Entropy of the delta potential from scipy's QUADPACK."""
    cont, _ = quad(
        lambda w: g_ref((w + mu) / T) * alpha / (alpha**2 + w**2) / np.pi,
        0,
        np.inf,
        epsabs=1e-13,
        epsrel=1e-12,
        limit=500,
    )
    bound = g_ref((mu + alpha) / T) if alpha < 0 else 0.0
    return bound + cont


@pytest.fixture(scope="module")
def delta_repulsive():
    return make_spectral_model(DeltaPotentialParams(1.0, 0.0))


@pytest.fixture(scope="module")
def delta_attractive():
    return make_spectral_model(DeltaPotentialParams(-1.0, 2.0))


@pytest.mark.parametrize("alpha,mu", [(1.0, 0.0), (-1.0, 2.0), (-1.0, 1.1), (2.5, 0.3)])
@pytest.mark.parametrize("T", [0.05, 1.0, 30.0])
def test_delta_entropy_against_quadpack(alpha, mu, T):
    m = make_spectral_model(DeltaPotentialParams(alpha, mu))
    assert_allclose(entropy(m, T), delta_entropy_quad(alpha, mu, T), rtol=1e-8, atol=1e-14)


def test_free_field_is_zero():
    m = trivial_model()
    assert entropy(m, 2.0) == 0.0
    assert free_energy(m, 2.0) == 0.0


def test_low_temperature_linear(delta_repulsive):
    # S ~ (1/pi) delta'(0) int g = pi T / (3 alpha)
    T = 1e-4
    assert_allclose(entropy(delta_repulsive, T), np.pi * T / 3, rtol=1e-3)


def test_free_energy_sign(delta_repulsive):
    assert free_energy(delta_repulsive, 1.0) < 0


@pytest.mark.parametrize("params", [PlasmaPointParams(1.0), DeltaPotentialParams(-1.0, 2.0)])
@pytest.mark.parametrize("T", [0.1, 3.0])
def test_entropy_is_minus_dF_dT(params, T):
    m = make_spectral_model(params)
    dF = central_difference(lambda t: free_energy(m, t), T, 1e-2 * T)
    assert_allclose(entropy(m, T), -dF, rtol=1e-7, atol=1e-9)


def test_rejects_bad_temperature(delta_repulsive):
    with pytest.raises(DomainError):
        entropy(delta_repulsive, 0.0)
    with pytest.raises(DomainError):
        free_energy(delta_repulsive, -1.0)


class TestHighTemperature:
    def test_repulsive_delta_form(self, delta_repulsive):
        form = high_temperature_form(delta_repulsive)
        assert_allclose(form.log_coefficient, 0.5, rtol=1e-14)
        assert_allclose(form.constant, 0.5, atol=1e-9)
        assert_allclose(form(1e3), delta_entropy_asymptote(1e3), atol=1e-9)

    def test_attractive_delta_constant(self, delta_attractive):
        # 1/2 - ln(mu - kappa) + (1/pi) int ln(w + mu) / (1 + w^2)
        moment, _ = quad(lambda w: np.log(w + 2.0) / (1 + w**2), 0, np.inf, epsabs=1e-13)
        form = high_temperature_form(delta_attractive)
        assert_allclose(form.log_coefficient, 0.5, rtol=1e-14)
        assert_allclose(form.constant, 0.5 + moment / np.pi, atol=1e-8)

    def test_attractive_delta_approach(self, delta_attractive):
        T = 1e3
        assert_allclose(entropy(delta_attractive, T), entropy_high_T(delta_attractive, T), atol=2e-3)

    @pytest.mark.parametrize("OR", [0.1, 1.0, 10.0])
    def test_plasma_form_matches_limit(self, OR):
        p = PlasmaPointParams(OR)
        form = high_temperature_form(make_spectral_model(p))
        assert abs(form.log_coefficient) < 1e-14
        assert_allclose(form.constant, plasma_entropy_limit(p), atol=1e-7)

    @pytest.mark.parametrize("Omega,R", [(1.0, 1.0), (5.0, 0.2), (0.5, 3.0)])
    def test_plasma_integral_identity(self, Omega, R):
        p = PlasmaPointParams(Omega, R)
        assert_allclose(plasma_entropy_limit_integral(p), plasma_entropy_limit(p), atol=1e-9)

    def test_plasma_limit_depends_on_product(self):
        a = plasma_entropy_limit(PlasmaPointParams(2.0, 0.5))
        b = plasma_entropy_limit(PlasmaPointParams(1.0, 1.0))
        assert a == b


class TestSweep:
    def test_temperature_grid(self):
        T = temperature_grid(0.01, 100.0, per_decade=10)
        assert T.size == 41
        assert_allclose(T[[0, -1]], [0.01, 100.0])
        with pytest.raises(ValueError):
            temperature_grid(1.0, 1.0)

    def test_sweep(self, delta_repulsive):
        s = thermo_sweep(delta_repulsive, [0.5, 2.0])
        assert all(isinstance(x, ThermoSample) for x in s)
        assert_allclose(s[1].entropy, entropy(delta_repulsive, 2.0))
        assert np.isnan(thermo_sweep(delta_repulsive, [1.0], with_free_energy=False)[0].free_energy)

    def test_deterministic(self):
        m = make_spectral_model(PlasmaPointParams(10.0))
        assert entropy(m, 3.7) == entropy(m, 3.7)
