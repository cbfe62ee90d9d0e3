"""Temperature-dependent free energy and entropy of a scattering background.

For a :class:`~scatentropy.models.SpectralModel` with binding energies
``kappa_n``, chemical potential ``mu`` and phase shift ``delta``::

    F(T) = T sum_n ln(1 - e^{-(mu - kappa_n)/T})
           + (T/pi) int_0^inf ln(1 - e^{-(omega + mu)/T}) delta'(omega) d omega

    S(T) = sum_n g((mu - kappa_n)/T)
           + (1/pi) int_0^inf g((omega + mu)/T) delta'(omega) d omega

with ``g(x) = x/(e^x - 1) - ln(1 - e^{-x})`` so that ``S = -dF/dT``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .models import DomainError, PlasmaPointParams, SpectralModel, plasma_phase_shift
from .models import _plasma_tail_integral
from .numerics import (
    QuadratureSpec,
    bose_log_term,
    g_kernel,
    integrate_panels,
    integrate_semi_infinite,
)

__all__ = [
    "ThermoSample",
    "HighTemperatureForm",
    "free_energy",
    "entropy",
    "entropy_high_T",
    "high_temperature_form",
    "plasma_entropy_limit",
    "plasma_entropy_limit_integral",
    "delta_entropy_asymptote",
    "temperature_grid",
    "thermo_sweep",
]


@dataclass(frozen=True)
class ThermoSample:
    T: float
    free_energy: float
    entropy: float


@dataclass(frozen=True)
class HighTemperatureForm:
    """Leading large-T behavior ``S ~ log_coefficient * ln T + constant``."""

    log_coefficient: float
    constant: float

    def __call__(self, T):
        return self.log_coefficient * np.log(T) + self.constant


def _check(model: SpectralModel, T):
    if not T > 0:
        raise DomainError("temperature must be positive")
    for kappa in model.bound_states:
        if not model.mu > kappa:
            raise DomainError(f"mu={model.mu} must exceed kappa={kappa}")


def _spec_for(model, spec):
    spec = spec or QuadratureSpec()
    if np.isfinite(model.panel_width) and model.panel_width < spec.panel_width_hint:
        spec = QuadratureSpec(
            rel_tol=spec.rel_tol,
            abs_tol=spec.abs_tol,
            panel_width_hint=model.panel_width,
            tail_cutoff_epsilon=spec.tail_cutoff_epsilon,
            max_subdivisions=spec.max_subdivisions,
        )
    return spec


def _continuum_integral(model, T, kernel, kernel_tail, spec):
    """``int_0^inf kernel((omega + mu)/T) delta'(omega) d omega``.

    ``kernel_tail(x)`` bounds ``int_x^inf |kernel|`` in the scaled variable.
    """
    mu = model.mu

    def integrand(w):
        return kernel((w + mu) / T) * model.phase_derivative(w)

    def tail_bound(w):
        env = model.derivative_envelope(w)
        if env == 0:
            return 0.0
        if not np.isfinite(env):
            return np.inf
        return env * T * kernel_tail((w + mu) / T)

    start = 0.5 * min(T, model.frequency_scale)
    return integrate_semi_infinite(integrand, spec, tail_bound=tail_bound, scale=start)


def _g_tail(x):
    # g(x) <= (x + 1) e^{-x} / (1 - e^{-x})
    if x <= 0:
        return np.inf
    return (x + 2) * np.exp(-x) / -np.expm1(-x)


def _bose_tail(x):
    if x <= 0:
        return np.inf
    return np.exp(-x) / -np.expm1(-x)


def free_energy(model: SpectralModel, T: float, spec: QuadratureSpec | None = None) -> float:
    """Temperature-dependent part of the free energy at temperature ``T``."""
    _check(model, T)
    bound = sum(T * float(bose_log_term((model.mu - k) / T)) for k in model.bound_states)
    res = _continuum_integral(model, T, bose_log_term, _bose_tail, _spec_for(model, spec))
    return bound + T / np.pi * res.value


def entropy(model: SpectralModel, T: float, spec: QuadratureSpec | None = None) -> float:
    """Entropy at temperature ``T`` by direct quadrature against ``delta'``."""
    _check(model, T)
    bound = sum(float(g_kernel((model.mu - k) / T)) for k in model.bound_states)
    res = _continuum_integral(model, T, g_kernel, _g_tail, _spec_for(model, spec))
    return bound + res.value / np.pi


def _log_moment(model: SpectralModel, spec: QuadratureSpec | None = None) -> float:
    """``L = int_0^inf ln(omega + mu) delta'(omega) d omega``.

    Direct quadrature on ``[0, W]``, then integration by parts beyond ``W``
    (``delta(inf) = 0``) so only the absolutely convergent
    ``int_W^inf delta / (omega + mu)`` is left, taken from the model's
    asymptotic tail.
    """
    mu = model.mu
    spec = _spec_for(model, spec)
    if model.phase_tail_integral is None:
        raise NotImplementedError(f"{model.name} has no asymptotic phase tail")
    W = model.tail_start
    if np.isfinite(model.panel_width):
        # end on a full period so the oscillating tail starts in phase
        W = np.ceil(W / model.panel_width) * model.panel_width
    inner = integrate_panels(lambda w: np.log(w + mu) * model.phase_derivative(w), 0.0, W, spec)
    boundary = np.log(W + mu) * float(model.phase(W))
    # int_W^inf ln(w+mu) delta' = -ln(W+mu) delta(W) - int_W^inf delta/(w+mu)
    return inner.value - boundary - model.phase_tail_integral(W, mu)


def high_temperature_form(model: SpectralModel, spec: QuadratureSpec | None = None) -> HighTemperatureForm:
    """Coefficients of the large-T entropy.

    Replacing ``g`` by its small-argument form ``1 - ln x`` gives::

        S ~ sum_n (ln T + 1 - ln(mu - kappa_n))
            + (1/pi) int (ln T + 1 - ln(omega + mu)) delta' d omega

    and with ``delta(inf) = 0`` the frequency integral of ``delta'`` is
    ``-delta(0)``.
    """
    n = len(model.bound_states)
    d0 = float(model.phase(0.0))
    coeff = n - d0 / np.pi
    const = coeff - sum(np.log(model.mu - k) for k in model.bound_states) - _log_moment(model, spec) / np.pi
    return HighTemperatureForm(float(coeff), float(const))


def entropy_high_T(model: SpectralModel, T: float, spec: QuadratureSpec | None = None) -> float:
    """Leading high-temperature entropy, ``log_coefficient ln T + constant``."""
    _check(model, T)
    return high_temperature_form(model, spec)(T)


def plasma_entropy_limit(p: PlasmaPointParams) -> float:
    """Closed-form large-T entropy of the plasma point, ``-ln(1 + Omega R)/2``."""
    return -0.5 * np.log1p(p.Omega * p.R)


def plasma_entropy_limit_integral(p: PlasmaPointParams, spec: QuadratureSpec | None = None) -> float:
    """``(1/pi) int_0^inf delta(omega)/omega d omega`` by quadrature.

    Panels follow the ``pi/R`` period up to ``W``; beyond it the phase is
    replaced by its ``-Omega sin^2(omega R)/omega`` tail, integrated in
    closed form.
    """
    spec = spec or QuadratureSpec()
    period = np.pi / p.R
    spec = QuadratureSpec(
        rel_tol=spec.rel_tol,
        abs_tol=spec.abs_tol,
        panel_width_hint=min(period, spec.panel_width_hint),
        tail_cutoff_epsilon=spec.tail_cutoff_epsilon,
        max_subdivisions=spec.max_subdivisions,
    )
    W = np.ceil(1e4 * max(p.Omega * p.R, 1.0)) * period
    slope = -p.Omega * p.R**2 / (1 + p.Omega * p.R)

    def integrand(w):
        w = np.asarray(w, dtype=float)
        safe = np.where(w > 0, w, 1.0)
        return np.where(w > 0, plasma_phase_shift(w, p) / safe, slope)

    inner = integrate_panels(integrand, 0.0, W, spec)
    return (inner.value + _plasma_tail_integral(W, 0.0, p)) / np.pi


def delta_entropy_asymptote(T) -> float:
    """Large-T entropy of the delta potential, ``(ln T + 1)/2``."""
    T = np.asarray(T, dtype=float)
    if np.any(T <= 0):
        raise DomainError("temperature must be positive")
    out = 0.5 * (np.log(T) + 1)
    return out[()] if out.ndim == 0 else out


def temperature_grid(t_min: float, t_max: float, per_decade: int = 40) -> np.ndarray:
    """Log-spaced temperatures, ``per_decade`` points per factor of ten."""
    if not 0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    n = max(2, int(round(per_decade * np.log10(t_max / t_min))) + 1)
    return np.logspace(np.log10(t_min), np.log10(t_max), n)


def thermo_sweep(model, temperatures, *, with_free_energy=True, spec=None) -> list[ThermoSample]:
    out = []
    for T in temperatures:
        F = free_energy(model, T, spec) if with_free_energy else np.nan
        out.append(ThermoSample(float(T), float(F), float(entropy(model, T, spec))))
    return out
