"""Closed-form scattering data for the plasma point and the delta potential.

Units are natural (k_B = hbar = c = 1): frequencies, temperatures, Omega,
alpha, mu and kappa are inverse lengths, R is a length.

Plasma point: ``V(x) = Omega * delta(x - R)`` on the half line with a
Dirichlet wall at ``x = 0``. Delta potential: ``V(x) = 2 alpha delta(x)`` on
the full line.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import sici

__all__ = [
    "DomainError",
    "PlasmaPointParams",
    "DeltaPotentialParams",
    "SpectralModel",
    "plasma_phase_shift",
    "plasma_phase_shift_derivative",
    "plasma_jost",
    "phase_from_jost",
    "plasma_small_omega_slope",
    "plasma_large_omega_tail",
    "plasma_derivative_envelope",
    "delta_phase_shift",
    "delta_phase_shift_derivative",
    "delta_bound_states",
    "make_spectral_model",
    "trivial_model",
]


class DomainError(ValueError):
    """Parameters outside the physical domain (e.g. ``mu <= kappa``)."""


@dataclass(frozen=True)
class PlasmaPointParams:
    Omega: float
    R: float = 1.0

    def __post_init__(self):
        if not self.Omega > 0:
            raise DomainError("plasma frequency Omega must be positive")
        if not self.R > 0:
            raise DomainError("radius R must be positive")


@dataclass(frozen=True)
class DeltaPotentialParams:
    alpha: float
    mu: float = 0.0

    def __post_init__(self):
        if self.alpha == 0 or not np.isfinite(self.alpha):
            raise DomainError("alpha must be finite and nonzero")
        if self.alpha < 0 and not self.mu > -self.alpha:
            raise DomainError(
                f"mu={self.mu} must exceed the binding energy kappa={-self.alpha}; "
                "mu == kappa makes the bound-state term ln(1 - e^0) singular"
            )
        if self.alpha > 0 and self.mu < 0:
            raise DomainError("mu must be non-negative")


@dataclass(frozen=True)
class SpectralModel:
    """Uniform spectral description consumed by :mod:`scatentropy.thermo`.

    Attributes
    ----------
    phase, phase_derivative : callable
        Vectorized ``delta(omega)`` and ``d delta / d omega`` on ``omega >= 0``.
    bound_states : tuple of float
        Binding energies ``kappa_n > 0``.
    mu : float
        Chemical potential; must exceed every ``kappa_n``.
    derivative_envelope : callable
        Non-increasing ``B(w)`` with ``|delta'(omega)| <= B(w)`` for all
        ``omega >= w``. Used to truncate frequency integrals.
    frequency_scale : float
        Typical frequency of the model (``1/R`` or ``|alpha|``).
    panel_width : float
        Largest safe quadrature panel (one oscillation period, or inf).
    phase_tail_integral : callable or None
        ``(W, mu) -> int_W^inf delta(omega) / (omega + mu) d omega`` from the
        asymptotic form of the phase, valid for ``W`` beyond
        ``tail_start``. Models without one fall back to brute-force sweeps.
    """

    phase: Callable
    phase_derivative: Callable
    bound_states: tuple = ()
    mu: float = 0.0
    derivative_envelope: Callable = field(default=lambda w: 0.0)
    frequency_scale: float = 1.0
    panel_width: float = np.inf
    bound_state_parities: tuple = ()
    phase_tail_integral: Callable | None = None
    tail_start: float = np.inf
    name: str = "model"

    def __post_init__(self):
        for kappa in self.bound_states:
            if not self.mu > kappa:
                raise DomainError(f"mu={self.mu} must exceed every binding energy (kappa={kappa})")


def _sin_over_omega(omega, R):
    """``sin(omega R)/omega`` and its omega-derivative, series near 0."""
    x = omega * R
    small = np.abs(x) < 1e-2
    xs = np.where(small, 1.0, x)
    w = np.where(small, 1.0, omega)
    a = np.where(small, R * (1 - x**2 / 6 + x**4 / 120), np.sin(xs) / w)
    da = np.where(
        small,
        R**2 * (-x / 3 + x**3 / 30),
        (xs * np.cos(xs) - np.sin(xs)) / w**2,
    )
    return a, da


def _plasma_z(omega, p):
    # z = i f = 1 + Omega sin(wR)/w e^{iwR}
    a, da = _sin_over_omega(omega, p.R)
    phase = np.exp(1j * omega * p.R)
    z = 1 + p.Omega * a * phase
    dz = p.Omega * phase * (da + 1j * p.R * a)
    return z, dz


def plasma_phase_shift(omega, p: PlasmaPointParams):
    r"""Phase shift of the plasma point.

    Evaluated as ``-pi/2 + atan2(N, D)`` with ``N = 1 + Omega a cos(wR)`` and
    ``D = Omega a sin(wR) >= 0`` where ``a = sin(wR)/w``, which is the same
    as :math:`-\pi/2 + \arctan(N/D)` but exact where ``sin(wR) = 0``.
    Non-positive, vanishes at ``omega = 0`` and ``omega = n pi / R``.
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0):
        raise ValueError("omega must be non-negative")
    a, _ = _sin_over_omega(omega, p.R)
    s, c = np.sin(omega * p.R), np.cos(omega * p.R)
    num = 1 + p.Omega * a * c
    den = p.Omega * a * s
    # den >= 0 analytically; clip rounding so atan2 stays on one branch
    out = -np.pi / 2 + np.arctan2(num, np.maximum(den, 0.0))
    return out[()] if out.ndim == 0 else out


def plasma_phase_shift_derivative(omega, p: PlasmaPointParams):
    """Analytic ``d delta / d omega`` of the plasma point, ``-Im(z'/z)``."""
    omega = np.asarray(omega, dtype=float)
    z, dz = _plasma_z(omega, p)
    out = -np.imag(dz / z)
    return out[()] if out.ndim == 0 else out


def plasma_jost(omega, p: PlasmaPointParams):
    """Jost function ``f = -i (1 + (Omega/omega) sin(omega R) e^{i omega R})``.

    Finite at ``omega = 0``, where it equals ``-i (1 + Omega R)``.
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0):
        raise ValueError("omega must be non-negative")
    out = -1j * _plasma_z(omega, p)[0]
    return out[()] if out.ndim == 0 else out


def phase_from_jost(f):
    """Half-line phase shift from a Jost function value.

    ``-(1/2i) ln(f/f*)`` is ``-arg f`` modulo pi. The branch is fixed by
    the free Jost function ``f = -i`` having zero phase, i.e. the result is
    ``-arg(i f)`` on the principal branch. For the plasma point ``i f`` stays
    in the closed upper half plane so no further unwrapping is needed.
    """
    f = np.asarray(f, dtype=complex)
    if np.any(f == 0):
        raise DomainError("zero Jost function: bound state or spectral point")
    out = -np.angle(1j * f)
    return out[()] if out.ndim == 0 else out


def plasma_small_omega_slope(p: PlasmaPointParams) -> float:
    """Slope of ``delta`` at ``omega = 0``: ``-Omega R^2 / (1 + Omega R)``.

    In units ``R = 1`` this reads ``-Omega R / (1 + Omega R)``.
    """
    return -p.Omega * p.R**2 / (1 + p.Omega * p.R)


def plasma_large_omega_tail(omega, p: PlasmaPointParams):
    """Leading large-frequency form ``-Omega sin^2(omega R) / omega``."""
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0):
        raise ValueError("omega must be positive")
    return -p.Omega * np.sin(omega * p.R) ** 2 / omega


def plasma_derivative_envelope(w, p: PlasmaPointParams) -> float:
    """Bound on ``|delta'(omega)|`` for ``omega >= w``.

    With ``z = 1 + Omega a e^{iwR}``: ``|z| >= 1/2`` once ``omega >= 2 Omega``
    and ``|z'| <= Omega (2R/omega + 1/omega^2)``. Below ``2 Omega`` no
    bound is claimed.
    """
    w = float(w)
    if w < 2 * p.Omega:
        return np.inf
    return 2 * p.Omega * (2 * p.R / w + 1 / w**2)


def _plasma_tail_integral(W, mu, p):
    """``int_W^inf tail(omega)/omega`` for the ``-Omega sin^2(omega R)/omega`` tail."""
    if mu != 0:
        raise ValueError("plasma point has mu = 0")
    # sin^2 = (1 - cos 2wR)/2 and int_W^inf cos(bw)/w^2 = cos(bW)/W - b (pi/2 - Si(bW))
    b = 2 * p.R
    si, _ = sici(b * W)
    cos_int = np.cos(b * W) / W - b * (np.pi / 2 - si)
    return -0.5 * p.Omega * (1 / W - cos_int)


def _delta_tail_integral(W, mu, alpha):
    """``int_W^inf -arctan(alpha/omega) / (omega + mu)`` to O((alpha/W)^5)."""
    r = mu / W
    first = 1 / W if mu == 0 else np.log1p(r) / mu
    # int_W^inf dw / (w^3 (w + mu)), series in mu/W (callers keep W >> mu)
    third = (1 - 0.75 * r + 0.6 * r**2) / (3 * W**3)
    return -(alpha * first - alpha**3 / 3 * third)


def delta_phase_shift(omega, p: DeltaPotentialParams):
    """``delta = -/+ pi/2 + arctan(omega/alpha)`` for ``alpha >/< 0``."""
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0):
        raise ValueError("omega must be non-negative")
    offset = -np.pi / 2 if p.alpha > 0 else np.pi / 2
    out = offset + np.arctan(omega / p.alpha)
    return out[()] if out.ndim == 0 else out


def delta_phase_shift_derivative(omega, p: DeltaPotentialParams):
    omega = np.asarray(omega, dtype=float)
    out = p.alpha / (p.alpha**2 + omega**2)
    return out[()] if out.ndim == 0 else out


def delta_bound_states(p: DeltaPotentialParams) -> list[float]:
    """Binding energies: none for ``alpha > 0``, ``[-alpha]`` otherwise."""
    return [] if p.alpha > 0 else [-p.alpha]


def make_spectral_model(params: PlasmaPointParams | DeltaPotentialParams) -> SpectralModel:
    """Bundle a parameter set into a :class:`SpectralModel`.

    The plasma point always uses ``mu = 0``.
    """
    if isinstance(params, PlasmaPointParams):
        return SpectralModel(
            phase=lambda w: plasma_phase_shift(w, params),
            phase_derivative=lambda w: plasma_phase_shift_derivative(w, params),
            bound_states=(),
            mu=0.0,
            derivative_envelope=lambda w: plasma_derivative_envelope(w, params),
            frequency_scale=1.0 / params.R,
            panel_width=np.pi / params.R,
            phase_tail_integral=lambda W, mu: _plasma_tail_integral(W, mu, params),
            tail_start=1e4 * max(params.Omega, 1 / params.R),
            name=f"plasma(Omega={params.Omega:g}, R={params.R:g})",
        )
    if isinstance(params, DeltaPotentialParams):
        kappas = tuple(delta_bound_states(params))
        alpha = params.alpha
        return SpectralModel(
            phase=lambda w: delta_phase_shift(w, params),
            phase_derivative=lambda w: delta_phase_shift_derivative(w, params),
            bound_states=kappas,
            mu=params.mu,
            derivative_envelope=lambda w: abs(alpha) / (alpha**2 + max(float(w), 0.0) ** 2),
            frequency_scale=abs(alpha),
            panel_width=np.inf,
            bound_state_parities=("even",) * len(kappas),
            phase_tail_integral=lambda W, mu: _delta_tail_integral(W, mu, alpha),
            tail_start=1e3 * (abs(alpha) + params.mu),
            name=f"delta(alpha={alpha:g}, mu={params.mu:g})",
        )
    raise TypeError(f"unsupported parameter type {type(params).__name__}")


def trivial_model() -> SpectralModel:
    """Free field: zero phase shift, no bound states."""
    zero = lambda w: np.zeros_like(np.asarray(w, dtype=float))  # noqa: E731
    return SpectralModel(
        phase=zero,
        phase_derivative=zero,
        phase_tail_integral=lambda W, mu: 0.0,
        tail_start=1.0,
        name="free",
    )
