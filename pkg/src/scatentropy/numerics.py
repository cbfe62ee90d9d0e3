"""Numerical kernels: Bose-Einstein log terms, the entropy kernel, adaptive
panel quadrature on semi-infinite ranges, finite differences and ln T fits.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

__all__ = [
    "QuadratureSpec",
    "QuadResult",
    "QuadratureError",
    "LogLinearFit",
    "g_kernel",
    "g_kernel_derivative",
    "g_small_expansion",
    "bose_log_term",
    "integrate_panels",
    "integrate_semi_infinite",
    "central_difference",
    "fit_log_linear",
]

_G_CUTOFF = 700.0

# Gauss-Legendre pair used on every panel; the low-order rule only provides
# the error estimate.
_LO_X, _LO_W = np.polynomial.legendre.leggauss(10)
_HI_X, _HI_W = np.polynomial.legendre.leggauss(20)


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance.

    The best available estimate is kept in ``value`` and ``error``.
    """

    def __init__(self, message, value, error):
        super().__init__(message)
        self.value = value
        self.error = error


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and panel layout for :func:`integrate_semi_infinite`.

    Parameters
    ----------
    rel_tol, abs_tol : float
        Target error is ``max(abs_tol, rel_tol * |I|)``.
    panel_width_hint : float
        Upper bound on the initial panel width. Oscillatory integrands should
        pass one period (``pi / R`` for the plasma point).
    tail_cutoff_epsilon : float
        Truncation point is moved out until the caller's tail bound is
        below this value.
    max_subdivisions : int
        Number of refinement sweeps before giving up.
    """

    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    panel_width_hint: float = np.inf
    tail_cutoff_epsilon: float = 1e-12
    max_subdivisions: int = 60

    def __post_init__(self):
        for name in ("rel_tol", "abs_tol", "panel_width_hint", "tail_cutoff_epsilon"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.rel_tol < 100 * np.finfo(float).eps:
            raise ValueError("rel_tol below 100 machine epsilons")


class QuadResult(NamedTuple):
    value: float
    error: float


@dataclass(frozen=True)
class LogLinearFit:
    """Least-squares fit ``S = a ln T + b``; ``residual`` is the RMS misfit."""

    a: float
    b: float
    residual: float
    n_samples: int


def _check_positive(x, name="x"):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise ValueError(f"{name} must be strictly positive")
    return x


def _log1mexp(x):
    """``ln(1 - e^{-x})`` for ``x > 0``, switching branches at ``ln 2``."""
    small = x <= np.log(2.0)
    xs = np.where(small, x, np.log(2.0))
    xl = np.where(small, np.log(2.0), x)
    return np.where(small, np.log(-np.expm1(-xs)), np.log1p(-np.exp(-xl)))


def bose_log_term(x):
    """Return ``ln(1 - exp(-x))`` for ``x > 0`` without cancellation.

    ``x = 0`` is the bound-state singularity ``mu == kappa`` and is rejected.
    """
    x = _check_positive(x)
    out = _log1mexp(x)
    return out[()] if out.ndim == 0 else out


def g_kernel(x):
    r"""Per-mode entropy :math:`g(x) = x/(e^x-1) - \ln(1-e^{-x})`.

    Strictly positive and decreasing on :math:`(0, \infty)`; returns 0 for
    ``x > 700`` where both terms underflow.
    """
    x = _check_positive(x)
    big = x > _G_CUTOFF
    xs = np.where(big, 1.0, x)
    out = xs / np.expm1(xs) - _log1mexp(xs)
    out = np.where(big, 0.0, out)
    return out[()] if out.ndim == 0 else out


def g_kernel_derivative(x):
    r"""Analytic :math:`g'(x) = -x e^x / (e^x - 1)^2`."""
    x = _check_positive(x)
    big = x > _G_CUTOFF
    xs = np.where(big, 1.0, x)
    # e^x/(e^x-1)^2 = e^{-x}/(1-e^{-x})^2
    em = -np.expm1(-xs)
    out = -xs * np.exp(-xs) / em**2
    out = np.where(big, 0.0, out)
    return out[()] if out.ndim == 0 else out


def g_small_expansion(x):
    """Leading small-argument form ``1 - ln x`` of :func:`g_kernel`."""
    x = _check_positive(x)
    return 1.0 - np.log(x)


def _gauss_panels(f, a, b):
    """Apply the 10/20-point Gauss pair on each panel ``[a_i, b_i]``."""
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    x_hi = mid[:, None] + half[:, None] * _HI_X[None, :]
    x_lo = mid[:, None] + half[:, None] * _LO_X[None, :]
    nodes = np.concatenate([x_hi, x_lo], axis=1)
    vals = np.asarray(f(nodes.ravel()), dtype=float).reshape(nodes.shape)
    hi = half * (vals[:, : _HI_X.size] @ _HI_W)
    lo = half * (vals[:, _HI_X.size:] @ _LO_W)
    return hi, np.abs(hi - lo)


def integrate_panels(f: Callable, a: float, b: float, spec: QuadratureSpec | None = None) -> QuadResult:
    """Adaptive panel Gauss quadrature of a vectorized ``f`` over ``[a, b]``.

    The interval is first cut into panels no wider than
    ``spec.panel_width_hint``; panels whose error estimate dominates are then
    bisected until the summed estimate meets the tolerance. The summation
    order depends only on the panel layout, so repeated calls are bitwise
    reproducible.
    """
    spec = spec or QuadratureSpec()
    if not b > a:
        if b == a:
            return QuadResult(0.0, 0.0)
        raise ValueError("integration limits must satisfy a <= b")
    n0 = 1 if not np.isfinite(spec.panel_width_hint) else max(1, int(np.ceil((b - a) / spec.panel_width_hint)))
    edges = np.linspace(a, b, n0 + 1)
    lo_edges, hi_edges = edges[:-1], edges[1:]
    vals, errs = _gauss_panels(f, lo_edges, hi_edges)

    for _ in range(spec.max_subdivisions):
        total = vals.sum()
        total_err = errs.sum()
        target = max(spec.abs_tol, spec.rel_tol * abs(total))
        if total_err <= target:
            return QuadResult(float(total), float(total_err))
        split = errs > target / vals.size
        mid = 0.5 * (lo_edges[split] + hi_edges[split])
        new_lo = np.concatenate([lo_edges[split], mid])
        new_hi = np.concatenate([mid, hi_edges[split]])
        new_vals, new_errs = _gauss_panels(f, new_lo, new_hi)
        lo_edges = np.concatenate([lo_edges[~split], new_lo])
        hi_edges = np.concatenate([hi_edges[~split], new_hi])
        vals = np.concatenate([vals[~split], new_vals])
        errs = np.concatenate([errs[~split], new_errs])
        order = np.argsort(lo_edges, kind="stable")
        lo_edges, hi_edges, vals, errs = lo_edges[order], hi_edges[order], vals[order], errs[order]

    raise QuadratureError(
        f"quadrature did not converge: error {errs.sum():.3e}", float(vals.sum()), float(errs.sum())
    )


def _find_cutoff(tail_bound, eps, start):
    w = start
    for _ in range(400):
        if tail_bound(w) <= eps:
            return w
        w *= 1.25
    raise QuadratureError("tail bound never fell below tail_cutoff_epsilon", np.nan, np.inf)


def integrate_semi_infinite(
    f: Callable,
    spec: QuadratureSpec | None = None,
    *,
    tail_bound: Callable[[float], float] | None = None,
    scale: float = 1.0,
) -> QuadResult:
    """Integrate ``f`` over ``[0, inf)``.

    Parameters
    ----------
    f : callable
        Vectorized integrand.
    spec : QuadratureSpec, optional
    tail_bound : callable, optional
        ``tail_bound(w)`` must bound ``int_w^inf |f|``. The range is truncated
        at the first ``w`` (searched geometrically from ``scale``) where this
        drops below ``spec.tail_cutoff_epsilon``. Without a bound the range is
        swept in doubling blocks until a block contributes less than the
        tolerance.
    scale : float
        Characteristic width of the integrand, used as the search start.

    Returns
    -------
    QuadResult
        Value and an error estimate that includes the truncated tail.
    """
    spec = spec or QuadratureSpec()
    if tail_bound is not None:
        w_max = _find_cutoff(tail_bound, spec.tail_cutoff_epsilon, scale)
        res = integrate_panels(f, 0.0, w_max, spec)
        return QuadResult(res.value, res.error + float(tail_bound(w_max)))

    total = integrate_panels(f, 0.0, scale, spec)
    value, err = total.value, total.error
    lo, hi = scale, 2.0 * scale
    small_blocks = 0
    for _ in range(200):
        block = integrate_panels(f, lo, hi, spec)
        value += block.value
        err += block.error
        if abs(block.value) <= max(spec.abs_tol, spec.rel_tol * abs(value)):
            small_blocks += 1
            if small_blocks >= 3:
                return QuadResult(value, err + abs(block.value))
        else:
            small_blocks = 0
        lo, hi = hi, 2.0 * hi
    raise QuadratureError("integrand tail did not decay", value, err)


def central_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """Five-point central difference with one Richardson step.

    The five-point stencil is O(h^4); combining steps ``h`` and ``h/2``
    removes the leading h^4 term.
    """
    if not h > 0:
        raise ValueError("step must be positive")

    def d5(step):
        return (
            f(x - 2 * step) - 8 * f(x - step) + 8 * f(x + step) - f(x + 2 * step)
        ) / (12 * step)

    coarse = d5(h)
    fine = d5(0.5 * h)
    return (16 * fine - coarse) / 15


def fit_log_linear(samples) -> LogLinearFit:
    """Least-squares fit of ``S = a ln T + b`` to ``(T, S)`` pairs."""
    data = np.asarray([(s[0], s[1]) for s in samples], dtype=float)
    if data.ndim != 2 or data.shape[0] < 4:
        raise ValueError("need at least 4 samples")
    T, S = data[:, 0], data[:, 1]
    if np.any(T <= 0):
        raise ValueError("temperatures must be positive")
    lnT = np.log(T)
    if np.ptp(lnT) == 0:
        raise ValueError("degenerate temperature samples")
    A = np.column_stack([lnT, np.ones_like(lnT)])
    (a, b), *_ = np.linalg.lstsq(A, S, rcond=None)
    resid = S - A @ np.array([a, b])
    return LogLinearFit(float(a), float(b), float(np.sqrt(np.mean(resid**2))), T.size)
