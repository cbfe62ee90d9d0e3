"""Transfer-matrix scattering for piecewise-constant potentials.

Solves ``-psi'' + V(x) psi = omega^2 psi`` for ``V`` constant on each
interval ``[b_i, b_{i+1})`` and zero outside the support. Inside every
interval the solution is propagated exactly with the 2x2 matrix acting on
``(psi, psi')``, so there is no stepping error. Two geometries:

``"full"``
    the whole line; transmission ``t``, reflection ``r`` and the phase
    ``delta = (1/2i) ln(t/t*)``.
``"half"``
    the half line ``x >= 0`` with ``psi(0) = 0``; the phase follows from the
    Jost function of the regular solution.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from .models import DomainError, SpectralModel

__all__ = [
    "PiecewiseConstantPotential",
    "ScatteringData",
    "BoundState",
    "BoundStateSearchError",
    "square_well",
    "thin_box_delta",
    "thin_box_plasma",
    "transfer_matrix",
    "transmission",
    "reflection",
    "phase_from_transmission",
    "phase_shift",
    "parity_phase_shifts",
    "half_line_jost",
    "half_line_phase",
    "scattering_data",
    "bound_states_numeric",
    "spectral_model",
]

KAPPA_GRID_POINTS = 200
KAPPA_GRID_MIN = 1e-4
KAPPA_MAX_GROWTH = 8  # enlargements of the search window before giving up


class BoundStateSearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class PiecewiseConstantPotential:
    """``V(x) = heights[i]`` on ``[breakpoints[i], breakpoints[i+1])``.

    ``heights`` are in units of inverse length squared (``omega^2``).
    """

    breakpoints: tuple
    heights: tuple
    geometry: str = "full"

    def __post_init__(self):
        b = np.asarray(self.breakpoints, dtype=float)
        h = np.asarray(self.heights, dtype=float)
        object.__setattr__(self, "breakpoints", tuple(float(x) for x in b))
        object.__setattr__(self, "heights", tuple(float(x) for x in h))
        if b.ndim != 1 or b.size < 2:
            raise ValueError("need at least two breakpoints")
        if np.any(np.diff(b) <= 0):
            raise ValueError("breakpoints must be strictly increasing")
        if h.size != b.size - 1:
            raise ValueError("need exactly one height per interval")
        if not np.all(np.isfinite(h)) or not np.all(np.isfinite(b)):
            raise ValueError("breakpoints and heights must be finite")
        if self.geometry not in ("full", "half"):
            raise ValueError("geometry must be 'full' or 'half'")
        if self.geometry == "half" and b[0] < 0:
            raise ValueError("half-line support must lie in x >= 0")

    @property
    def support(self):
        return self.breakpoints[0], self.breakpoints[-1]

    @property
    def widths(self):
        return np.diff(self.breakpoints)

    @property
    def depth_scale(self):
        """``sqrt(max |V|)``, the wave number set by the potential."""
        return float(np.sqrt(np.max(np.abs(self.heights))))

    @property
    def length_scale(self):
        lo, hi = self.support
        if self.geometry == "half":
            lo = 0.0
        return hi - lo

    def is_symmetric(self, tol=1e-12):
        b = np.asarray(self.breakpoints)
        h = np.asarray(self.heights)
        center = 0.5 * (b[0] + b[-1])
        return bool(
            np.allclose(b - center, -(b[::-1] - center), atol=tol * max(1.0, np.ptp(b)))
            and np.allclose(h, h[::-1], atol=tol * max(1.0, np.max(np.abs(h))))
        )

    def centered(self):
        center = 0.5 * (self.breakpoints[0] + self.breakpoints[-1])
        return PiecewiseConstantPotential(
            tuple(x - center for x in self.breakpoints), self.heights, self.geometry
        )


class ScatteringData(NamedTuple):
    omega: float
    transmission: complex
    reflection: complex
    phase: float


class BoundState(NamedTuple):
    kappa: float
    parity: str  # "even", "odd" or "none"


def square_well(depth, width, center=0.0):
    """Well ``V = -depth`` on ``[center - width/2, center + width/2]``."""
    return PiecewiseConstantPotential((center - width / 2, center + width / 2), (-depth,))


def thin_box_delta(alpha, width):
    """Box of height ``2 alpha / width`` centered at 0; tends to ``2 alpha delta(x)``."""
    return PiecewiseConstantPotential((-width / 2, width / 2), (2 * alpha / width,))


def thin_box_plasma(Omega, R, width):
    """Half-line box of height ``Omega / width`` centered at ``R``."""
    return PiecewiseConstantPotential((R - width / 2, R + width / 2), (Omega / width,), "half")


def _sinc_factor(q, d):
    """``sin(q d)/q`` for complex ``q`` with the ``q -> 0`` limit ``d``."""
    z = q * d
    small = np.abs(z) < 1e-3
    zs = np.where(small, 1.0, z)
    qs = np.where(small, 1.0, q)
    return np.where(small, d * (1 - z**2 / 6 + z**4 / 120), np.sin(zs) / qs)


def _propagate(energy, widths, heights, state):
    """Carry ``(psi, psi')`` through constant pieces at energy ``omega^2``.

    ``energy`` has shape ``(n,)``; ``state`` is ``(psi, dpsi)`` of shape
    ``(n,)`` each. ``cos(q d)`` and ``sin(q d)/q`` are even in ``q`` so the
    branch of the square root is irrelevant, and ``q = 0`` is the linear
    solution.
    """
    psi, dpsi = state
    for d, v in zip(widths, heights):
        q = np.sqrt((energy - v).astype(complex))
        c = np.cos(q * d)
        sq = _sinc_factor(q, d)
        psi, dpsi = c * psi + sq * dpsi, -(q**2) * sq * psi + c * dpsi
    return psi, dpsi


def _propagator(energy, widths, heights):
    """Full ``(psi, psi')`` propagator, shape ``(n, 2, 2)``."""
    n = energy.size
    col0 = _propagate(energy, widths, heights, (np.ones(n, complex), np.zeros(n, complex)))
    col1 = _propagate(energy, widths, heights, (np.zeros(n, complex), np.ones(n, complex)))
    P = np.empty((n, 2, 2), complex)
    P[:, 0, 0], P[:, 1, 0] = col0
    P[:, 0, 1], P[:, 1, 1] = col1
    return P


def _plane_wave_basis(omega, x):
    # (A, B) -> (psi, psi') for psi = A e^{iwx} + B e^{-iwx}
    ep, em = np.exp(1j * omega * x), np.exp(-1j * omega * x)
    S = np.empty(omega.shape + (2, 2), complex)
    S[..., 0, 0], S[..., 0, 1] = ep, em
    S[..., 1, 0], S[..., 1, 1] = 1j * omega * ep, -1j * omega * em
    return S


def _plane_wave_basis_inv(omega, x):
    ep, em = np.exp(1j * omega * x), np.exp(-1j * omega * x)
    S = np.empty(omega.shape + (2, 2), complex)
    S[..., 0, 0], S[..., 0, 1] = 0.5 * em, em / (2j * omega)
    S[..., 1, 0], S[..., 1, 1] = 0.5 * ep, -ep / (2j * omega)
    return S


def transfer_matrix(pot: PiecewiseConstantPotential, omega):
    """Plane-wave transfer matrix ``(A, B)_left -> (A, B)_right``.

    Amplitudes refer to ``A e^{i omega x} + B e^{-i omega x}`` in absolute
    coordinates, so the free potential gives the identity. The determinant
    is 1. Returns shape ``(2, 2)`` for scalar ``omega`` else ``(n, 2, 2)``.
    """
    if pot.geometry != "full":
        raise ValueError("transfer_matrix needs full-line geometry")
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    if np.any(w <= 0):
        raise ValueError("omega must be positive")
    lo, hi = pot.support
    P = _propagator(w**2, pot.widths, pot.heights)
    M = _plane_wave_basis_inv(w, np.full_like(w, hi)) @ P @ _plane_wave_basis(w, np.full_like(w, lo))
    return M[0] if np.ndim(omega) == 0 else M


def transmission(pot: PiecewiseConstantPotential, omega):
    """Transmission amplitude ``t = 1/M22`` for a wave incident from the left."""
    M = transfer_matrix(pot, omega)
    return 1 / M[..., 1, 1]


def reflection(pot: PiecewiseConstantPotential, omega):
    M = transfer_matrix(pot, omega)
    return -M[..., 1, 0] / M[..., 1, 1]


def _wrap_half_pi(x):
    """Map onto ``(-pi/2, pi/2]``, the principal branch modulo pi."""
    return np.pi / 2 - np.mod(np.pi / 2 - x, np.pi)


def phase_from_transmission(t, previous=None):
    """``(1/2i) ln(t/t*)``, i.e. ``arg t`` modulo pi.

    Without ``previous`` the principal value in ``(-pi/2, pi/2]`` is
    returned; otherwise the branch closest to ``previous``, which is how a
    continuous phase is followed along a frequency grid.
    """
    t = np.asarray(t, dtype=complex)
    if np.any(t == 0):
        raise DomainError("t = 0 has no phase; follow the curve with one-sided limits")
    principal = _wrap_half_pi(np.angle(t))
    if previous is None:
        return principal[()] if principal.ndim == 0 else principal
    out = previous + _wrap_half_pi(principal - previous)
    return out[()] if np.ndim(out) == 0 else out


def _anchor_frequency(pot):
    return 50.0 * max(pot.depth_scale, 1.0 / pot.length_scale)


def _follow_phase(raw, omegas, anchor, length, max_step=0.3, max_rounds=30):
    """Continuous phase on ``omegas`` from principal values modulo pi.

    ``raw(w)`` returns values defined modulo pi that are continuous in
    ``w``. The curve is followed downward from ``anchor`` (where the phase
    is taken on its principal branch, i.e. near 0) on a grid that is
    refined until consecutive steps stay below ``max_step``. Sequential in
    frequency by construction.
    """
    omegas = np.asarray(omegas, dtype=float)
    lo = min(omegas.min(), anchor)
    hi = max(omegas.max(), anchor)
    n_lin = int(min(max(np.ceil(8 * hi * length / np.pi), 64), 400_000))
    grid = np.unique(np.concatenate([
        omegas,
        [anchor],
        np.geomspace(lo, hi, 2000),
        np.linspace(lo, hi, n_lin),
    ]))
    vals = raw(grid)
    for _ in range(max_rounds):
        steps = _wrap_half_pi(np.diff(vals))
        bad = np.abs(steps) > max_step
        if not bad.any():
            break
        mids = np.sqrt(grid[:-1][bad] * grid[1:][bad])
        grid = np.concatenate([grid, mids])
        order = np.argsort(grid)
        grid = grid[order]
        vals = np.concatenate([vals, raw(mids)])[order]
    steps = _wrap_half_pi(np.diff(vals))
    cont = np.concatenate([[0.0], np.cumsum(steps)])
    ia = np.searchsorted(grid, anchor)
    cont = cont - cont[ia] + _wrap_half_pi(vals[ia])
    return cont[np.searchsorted(grid, omegas)]


def phase_shift(pot: PiecewiseConstantPotential, omega):
    """Continuous scattering phase, ``-> 0`` as ``omega -> inf``.

    Full line: the transmission phase. Half line: see :func:`half_line_phase`.
    """
    if pot.geometry == "half":
        return half_line_phase(pot, omega)
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    out = _follow_phase(lambda x: np.angle(transmission(pot, x)), w, _anchor_frequency(pot), pot.length_scale)
    return out[0] if np.ndim(omega) == 0 else out


def parity_phase_shifts(pot: PiecewiseConstantPotential, omega):
    """Even and odd channel phases of a symmetric full-line potential.

    With the potential centered at the origin the S-matrix eigenvalues are
    ``t + r`` (even) and ``t - r`` (odd) and ``delta_pm = (1/2i) ln(t pm r)``.
    """
    if pot.geometry != "full" or not pot.is_symmetric():
        raise ValueError("parity phases need a symmetric full-line potential")
    c = pot.centered()
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    anchor = _anchor_frequency(c)

    def raw(sign):
        def f(x):
            M = transfer_matrix(c, x)
            t = 1 / M[:, 1, 1]
            r = -M[:, 1, 0] / M[:, 1, 1]
            return 0.5 * np.angle(t + sign * r)
        return f

    even = _follow_phase(raw(+1), w, anchor, c.length_scale)
    odd = _follow_phase(raw(-1), w, anchor, c.length_scale)
    if np.ndim(omega) == 0:
        return even[0], odd[0]
    return even, odd


def half_line_jost(pot: PiecewiseConstantPotential, omega):
    """Jost function of the regular solution on the half line.

    The regular solution starts as ``psi(0) = 0, psi'(0) = omega`` (equal
    to ``sin(omega x)`` when free) and beyond the support is written as
    ``(F e^{-i omega x} + F* e^{i omega x})/2``; the Jost function is
    ``f = -F``, so the free value is ``-i`` and the plasma-point closed form
    is reproduced exactly.
    """
    if pot.geometry != "half":
        raise ValueError("half_line_jost needs half-line geometry")
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    if np.any(w <= 0):
        raise ValueError("omega must be positive")
    lo, hi = pot.support
    widths = np.concatenate([[lo], pot.widths]) if lo > 0 else pot.widths
    heights = np.concatenate([[0.0], pot.heights]) if lo > 0 else np.asarray(pot.heights)
    psi, dpsi = _propagate(w**2, widths, heights, (np.zeros(w.size, complex), w.astype(complex)))
    coeff = (1j * w * psi - dpsi) * np.exp(1j * w * hi) / (2j * w)
    f = -2 * coeff
    return f[0] if np.ndim(omega) == 0 else f


def half_line_phase(pot: PiecewiseConstantPotential, omega):
    """Half-line phase ``-(1/2i) ln(f/f*)``, continuous and ``-> 0`` at infinity."""
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    out = _follow_phase(
        lambda x: -np.angle(1j * half_line_jost(pot, x)),
        w,
        _anchor_frequency(pot),
        pot.length_scale,
    )
    return out[0] if np.ndim(omega) == 0 else out


def scattering_data(pot: PiecewiseConstantPotential, omegas) -> list[ScatteringData]:
    w = np.asarray(omegas, dtype=float)
    t = transmission(pot, w)
    r = reflection(pot, w)
    delta = phase_shift(pot, w)
    return [ScatteringData(float(a), complex(b), complex(c), float(d)) for a, b, c, d in zip(w, t, r, delta)]


def _matching_function(pot, kappa):
    """Real function of ``kappa`` vanishing at bound states ``omega = i kappa``.

    Starts from the decaying solution on the left (or the Dirichlet wall),
    propagates across the support and measures the admixture of the growing
    solution on the right, ``psi' + kappa psi``. The result is scaled by the
    free growth ``e^{-kappa L}`` to stay finite.
    """
    kappa = np.atleast_1d(np.asarray(kappa, dtype=float))
    n = kappa.size
    energy = -(kappa**2)
    lo, hi = pot.support
    if pot.geometry == "full":
        widths, heights = pot.widths, np.asarray(pot.heights)
        state = (np.ones(n, complex), kappa.astype(complex))
        span = hi - lo
    else:
        widths = np.concatenate([[lo], pot.widths]) if lo > 0 else pot.widths
        heights = np.concatenate([[0.0], pot.heights]) if lo > 0 else np.asarray(pot.heights)
        state = (np.zeros(n, complex), np.ones(n, complex))
        span = hi
    psi, dpsi = _propagate(energy, widths, heights, state)
    scale = np.exp(-kappa * span)
    return (dpsi + kappa * psi).real * scale, psi.real


def _kappa_refinement(pot):
    """Extra kappa nodes, uniform in the local wave number of each well piece.

    Deep states crowd below ``sqrt(-V_i)`` where a log grid is too coarse;
    spacing the nodes by ``pi / (8 L)`` in ``q = sqrt(-V_i - kappa^2)``
    keeps roughly eight nodes between consecutive roots.
    """
    span = pot.length_scale
    nodes = []
    for v in sorted(set(pot.heights)):
        if v >= 0:
            continue
        qmax = np.sqrt(-v)
        q = np.linspace(0.0, qmax, int(np.ceil(8 * qmax * span / np.pi)) + 2)
        nodes.append(np.sqrt(np.maximum(-v - q**2, 0.0)))
    return np.concatenate(nodes) if nodes else np.empty(0)


def bound_states_numeric(pot: PiecewiseConstantPotential, kappa_max=None) -> list[BoundState]:
    """All binding energies ``kappa > KAPPA_GRID_MIN`` of ``pot``.

    Sign changes of the matching function on a log-spaced kappa grid are
    refined by Brent's method to ``1e-12`` relative. The grid is augmented
    with nodes uniform in each piece's local wave number (see
    :func:`_kappa_refinement`) so closely spaced deep states are resolved.
    The search window
    ``[1e-4, 2 sqrt(max |V|)]`` is enlarged if the top of the grid is still
    inside the spectrum, up to ``KAPPA_MAX_GROWTH`` doublings.

    Parity is reported for symmetric full-line potentials, otherwise
    ``"none"``.
    """
    depth = max(0.0, -min(pot.heights))
    if depth == 0:
        return []
    kmax = kappa_max or 2 * np.sqrt(depth)
    extra = _kappa_refinement(pot)
    for _ in range(KAPPA_MAX_GROWTH):
        grid = np.geomspace(KAPPA_GRID_MIN, kmax, KAPPA_GRID_POINTS)
        grid = np.unique(np.concatenate([grid, extra[(extra > KAPPA_GRID_MIN) & (extra < kmax)]]))
        D, _ = _matching_function(pot, grid)
        # above every bound state D keeps the sign of the free value, 2 kappa > 0
        if D[-1] > 0:
            break
        kmax *= 2
    else:
        raise BoundStateSearchError("matching function never settled; raise kappa_max")

    symmetric = pot.geometry == "full" and pot.is_symmetric()
    states = []
    f = lambda k: float(_matching_function(pot, k)[0][0])  # noqa: E731
    for i in np.nonzero(np.sign(D[:-1]) * np.sign(D[1:]) < 0)[0]:
        k = brentq(f, grid[i], grid[i + 1], xtol=1e-14, rtol=1e-12)
        parity = "none"
        if symmetric:
            psi_right = _matching_function(pot, k)[1][0]
            parity = "even" if psi_right > 0 else "odd"
        states.append(BoundState(float(k), parity))
    for i in np.nonzero(D == 0)[0]:
        states.append(BoundState(float(grid[i]), "none"))
    return sorted(states, key=lambda s: -s.kappa)


def _log_t_derivative(pot, w):
    """``d delta / d omega = Im d ln t / d omega`` by a central difference of ln t."""
    h = 1e-5 * w
    if pot.geometry == "full":
        up, dn = transmission(pot, w + h), transmission(pot, w - h)
        return np.angle(up / dn) / (2 * h)
    up, dn = half_line_jost(pot, w + h), half_line_jost(pot, w - h)
    return -np.angle(up / dn) / (2 * h)


def spectral_model(pot: PiecewiseConstantPotential, mu=None, omega_zero=None) -> SpectralModel:
    """Wrap a numeric potential as a :class:`SpectralModel`.

    ``delta'`` comes from a central difference of ``ln t``, which needs no
    branch tracking. ``mu`` defaults to 0 and must exceed every binding
    energy. The phase at zero frequency is extrapolated from ``omega_zero``
    (default ``1e-6`` times the potential's frequency scale).
    """
    states = bound_states_numeric(pot)
    kappas = tuple(s.kappa for s in states)
    mu = 0.0 if mu is None else float(mu)
    scale = max(pot.depth_scale, 1 / pot.length_scale)
    w0 = omega_zero or 1e-6 * scale
    d0 = float(phase_shift(pot, w0))
    strength = float(np.sum(np.abs(pot.heights) * pot.widths))

    def phase(w):
        w = np.atleast_1d(np.asarray(w, dtype=float))
        out = np.full(w.shape, d0)
        pos = w > w0
        if pos.any():
            out[pos] = phase_shift(pot, w[pos])
        return out[0] if out.size == 1 else out

    def derivative(w):
        w = np.asarray(w, dtype=float)
        return _log_t_derivative(pot, np.maximum(w, w0))

    def envelope(w):
        # Born-type decay |delta'| <~ strength (1 + L w) / w^2 beyond the depth scale
        if w < 4 * pot.depth_scale or w <= 0:
            return np.inf
        return 4 * strength * (1 + pot.length_scale * w) / w**2

    return SpectralModel(
        phase=phase,
        phase_derivative=derivative,
        bound_states=kappas,
        mu=mu,
        derivative_envelope=envelope,
        frequency_scale=scale,
        panel_width=np.pi / pot.length_scale,
        bound_state_parities=tuple(s.parity for s in states),
        name=f"potential({pot.geometry}, {len(pot.heights)} pieces)",
    )
