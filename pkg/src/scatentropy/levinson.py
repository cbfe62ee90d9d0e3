"""Levinson's theorem in one dimension and the ln T growth of the entropy.

Per parity channel, with ``N_+``/``N_-`` even/odd bound states and
``Delta delta = delta(0) - delta(inf)``::

    non-critical:  Delta delta_+ = pi N_+ - pi/2,   Delta delta_- = pi N_-
    critical:      Delta delta_+ = pi N_+,          Delta delta_- = pi N_- + pi/2

At high temperature ``S = (N - delta(0)/pi) ln T + O(1)``. Channel by
channel the coefficient is ``1/2`` (even) or ``0`` (odd) in the
non-critical case and ``0`` (even) or ``-1/2`` (odd) in the critical case.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .models import SpectralModel
from .numerics import fit_log_linear
from .solver import (
    PiecewiseConstantPotential,
    bound_states_numeric,
    parity_phase_shifts,
    phase_shift,
    transmission,
)
from .thermo import ThermoSample

__all__ = [
    "LevinsonReport",
    "Classification",
    "ChannelMeasurement",
    "levinson_predict_delta",
    "log_coefficient",
    "channel_log_coefficient",
    "classify_coefficient",
    "verify_model",
    "measure_potential",
    "even_before_odd_fillings",
]

# (parity, critical) -> per-channel ln T coefficient
COEFFICIENT_TABLE = {
    ("even", False): 0.5,
    ("odd", False): 0.0,
    ("even", True): 0.0,
    ("odd", True): -0.5,
}


@dataclass(frozen=True)
class Classification:
    cells: tuple
    non_negative: bool
    excluded_by_ordering: bool


@dataclass
class LevinsonReport:
    n_even: int
    n_odd: int
    delta_diff: float
    critical: bool
    predicted_log_coeff: float
    measured_log_coeff: float
    consistent: bool
    tolerance: float
    measured_constant: float = float("nan")
    fit_residual: float = float("nan")
    model: str = ""
    notes: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def levinson_predict_delta(n_even: int, n_odd: int, critical=False):
    """Phase differences ``(Delta delta_+, Delta delta_-)`` from bound-state counts.

    ``critical`` is ``False``, ``True`` (both channels shifted, the
    two-line form of the theorem) or ``"even"``/``"odd"`` for a half-bound
    state in that channel only.
    """
    if n_even < 0 or n_odd < 0:
        raise ValueError("counts must be non-negative")
    if critical not in (False, True, "even", "odd"):
        raise ValueError("critical must be a bool, 'even' or 'odd'")
    even_crit = critical is True or critical == "even"
    odd_crit = critical is True or critical == "odd"
    d_plus = np.pi * n_even - (0.0 if even_crit else np.pi / 2)
    d_minus = np.pi * n_odd + (np.pi / 2 if odd_crit else 0.0)
    return d_plus, d_minus


def log_coefficient(n_bound: int, delta_at_zero: float) -> float:
    """Coefficient of ``ln T`` in the high-T entropy: ``N - delta(0)/pi``."""
    return n_bound - delta_at_zero / np.pi


def channel_log_coefficient(parity: str, n_bound: int, critical: bool) -> float:
    """Per-channel coefficient obtained by inserting Levinson's relation."""
    d_plus, d_minus = levinson_predict_delta(
        n_bound if parity == "even" else 0,
        n_bound if parity == "odd" else 0,
        parity if critical else False,
    )
    delta0 = d_plus if parity == "even" else d_minus
    return log_coefficient(n_bound, delta0)


def classify_coefficient(value: float, tol: float = 1e-9) -> Classification:
    """Table cells consistent with a measured per-channel coefficient.

    ``-1/2`` only arises from an odd half-bound state; since an even state
    always precedes an odd one such a channel is accompanied by a
    non-critical even channel, so it is flagged as excluded for a complete
    spectrum.
    """
    k = 2 * value
    if abs(k - round(k)) > 2 * tol:
        raise ValueError(f"{value} is not a half-integer")
    cells = tuple(
        {"parity": p, "critical": c}
        for (p, c), v in COEFFICIENT_TABLE.items()
        if abs(v - value) <= tol
    )
    if not cells:
        raise ValueError(f"{value} does not appear in the coefficient table")
    return Classification(cells, non_negative=value >= -tol, excluded_by_ordering=value < -tol)


def even_before_odd_fillings(max_states: int):
    """Enumerate ``(N_+, N_-, half_bound_parity)`` respecting alternating parity.

    Bound states alternate even, odd, even, ... from the ground state; a
    half-bound state at threshold, if present, carries the next parity.
    """
    for n in range(max_states + 1):
        n_even, n_odd = (n + 1) // 2, n // 2
        yield n_even, n_odd, None
        yield n_even, n_odd, "even" if n % 2 == 0 else "odd"


def verify_model(
    model: SpectralModel,
    thermo_sweep,
    tolerance: float = 0.01,
    anchor_frequency: float | None = None,
) -> LevinsonReport:
    """Compare the fitted ln T coefficient of a sweep with ``N - delta(0)/pi``.

    ``thermo_sweep`` is a sequence of :class:`ThermoSample` (or ``(T, S)``
    pairs) covering at least two decades of high temperature. The phase is
    checked to vanish at ``anchor_frequency`` before the prediction is used.
    """
    samples = [(s.T, s.entropy) if isinstance(s, ThermoSample) else (s[0], s[1]) for s in thermo_sweep]
    T = np.array([s[0] for s in samples])
    if np.log10(T.max() / T.min()) < 2 - 1e-9:
        raise ValueError("sweep must span at least two decades of T")
    notes = []
    w_inf = anchor_frequency or 1e6 * model.frequency_scale
    d_inf = float(model.phase(w_inf))
    if abs(d_inf) >= 1e-3:
        raise ValueError(f"phase at omega={w_inf:g} is {d_inf:g}; delta(inf) = 0 is required")
    fit = fit_log_linear(samples)
    d0 = float(model.phase(0.0))
    n = len(model.bound_states)
    predicted = log_coefficient(n, d0)
    parities = list(model.bound_state_parities)
    n_even = parities.count("even")
    n_odd = parities.count("odd")
    if len(parities) < n:
        notes.append("parity of some bound states unknown")
    return LevinsonReport(
        n_even=n_even,
        n_odd=n_odd,
        delta_diff=d0 - d_inf,
        critical=False,
        predicted_log_coeff=float(predicted),
        measured_log_coeff=fit.a,
        consistent=bool(abs(predicted - fit.a) <= tolerance),
        tolerance=tolerance,
        measured_constant=fit.b,
        fit_residual=fit.residual,
        model=model.name,
        notes=notes,
    )


@dataclass(frozen=True)
class ChannelMeasurement:
    """Numeric Levinson data for a full-line potential."""

    n_even: int
    n_odd: int
    delta_zero: float
    delta_plus_zero: float | None
    delta_minus_zero: float | None
    critical: bool | str
    t_at_zero: float
    kappas: tuple


CRITICAL_T_THRESHOLD = 1e-2


def measure_potential(pot: PiecewiseConstantPotential, omega_zero: float | None = None) -> ChannelMeasurement:
    """Low-frequency phases, bound-state counts and a criticality flag.

    ``omega_zero`` (default ``1e-6`` of the potential's frequency scale)
    stands in for ``omega -> 0``. A non-critical potential has ``t(0) = 0``;
    the flag is raised when ``|t(omega_zero)|`` exceeds
    ``CRITICAL_T_THRESHOLD``, i.e. a half-bound state within roughly
    ``omega_zero / CRITICAL_T_THRESHOLD`` of threshold. For symmetric
    potentials the flag names the channel whose phase sits on the shifted
    branch (``"even"`` or ``"odd"``); otherwise it is ``True``.
    """
    if pot.geometry != "full":
        raise ValueError("channel measurements need a full-line potential")
    scale = max(pot.depth_scale, 1 / pot.length_scale)
    w0 = omega_zero or 1e-6 * scale
    states = bound_states_numeric(pot)
    d0 = float(phase_shift(pot, w0))
    t0 = float(abs(transmission(pot, w0)))
    d_plus = d_minus = None
    if pot.is_symmetric():
        d_plus, d_minus = (float(v) for v in parity_phase_shifts(pot, w0))
    critical = t0 > CRITICAL_T_THRESHOLD
    if critical and d_plus is not None:
        # non-critical even phases sit at half-integer multiples of pi
        frac_plus = abs(d_plus / np.pi - np.round(d_plus / np.pi))
        critical = "even" if frac_plus < 0.25 else "odd"
    return ChannelMeasurement(
        n_even=sum(s.parity == "even" for s in states),
        n_odd=sum(s.parity == "odd" for s in states),
        delta_zero=d0,
        delta_plus_zero=d_plus,
        delta_minus_zero=d_minus,
        critical=critical,
        t_at_zero=t0,
        kappas=tuple(s.kappa for s in states),
    )
