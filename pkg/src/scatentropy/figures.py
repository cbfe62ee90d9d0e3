"""Data and SVG plots for the four standard figures.

=======  ==========================================  ==========================
figure   content                                     grid
=======  ==========================================  ==========================
fig1     plasma-point phase, Omega R = 1, 10         omega R in [0, 20], 2001
fig2     plasma-point entropy, Omega R = 0.1, 1, 10  T R in [0.01, 100], 400 log
fig3     delta phase, alpha = -10, -1, 1, 10         omega in [0, 20], 2001
fig4     delta entropy, alpha = 1 (mu = 0) and       T in [0.01, 100], 400 log
         alpha = -1 (mu = 1.1, 2)
=======  ==========================================  ==========================

Lengths are in units of ``R = 1`` (plasma) and ``|alpha| = 1`` (delta).
Curves are listed from top to bottom.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .formats import format_csv
from .models import (
    DeltaPotentialParams,
    PlasmaPointParams,
    delta_phase_shift,
    make_spectral_model,
    plasma_phase_shift,
)
from .svgplot import line_plot
from .thermo import entropy

__all__ = ["OMEGA_GRID", "T_GRID", "FIGURES", "figure_data", "write_figures", "curve_order_holds"]

OMEGA_GRID = np.linspace(0.0, 20.0, 2001)
T_GRID = np.logspace(-2, 2, 400)

PLASMA_PHASE_OMEGA_R = (1.0, 10.0)
PLASMA_ENTROPY_OMEGA_R = (0.1, 1.0, 10.0)
DELTA_PHASE_ALPHAS = (-10.0, -1.0, 1.0, 10.0)
DELTA_ENTROPY_CASES = ((1.0, 0.0), (-1.0, 1.1), (-1.0, 2.0))

MU_EQUALS_KAPPA_NOTE = (
    "alpha=-1, mu=1 omitted: mu equals the binding energy kappa=1 and the bound-state "
    "term g((mu-kappa)/T) diverges"
)


def _fig1():
    cols = {"omega": OMEGA_GRID}
    for v in PLASMA_PHASE_OMEGA_R:
        cols[f"delta_OmegaR_{v:g}"] = plasma_phase_shift(OMEGA_GRID, PlasmaPointParams(v, 1.0))
    return cols, {k: ("1/R" if k == "omega" else "rad") for k in cols}, []


def _fig2():
    cols = {"T": T_GRID}
    for v in PLASMA_ENTROPY_OMEGA_R:
        m = make_spectral_model(PlasmaPointParams(v, 1.0))
        cols[f"S_OmegaR_{v:g}"] = np.array([entropy(m, T) for T in T_GRID])
    return cols, {"T": "1/R"}, []


def _fig3():
    cols = {"omega": OMEGA_GRID}
    for a in DELTA_PHASE_ALPHAS:
        mu = -a + 1.0 if a < 0 else 0.0
        cols[f"delta_alpha_{a:g}"] = delta_phase_shift(OMEGA_GRID, DeltaPotentialParams(a, mu))
    return cols, {k: ("1/length" if k == "omega" else "rad") for k in cols}, []


def _fig4():
    cols = {"T": T_GRID}
    for a, mu in DELTA_ENTROPY_CASES:
        m = make_spectral_model(DeltaPotentialParams(a, mu))
        cols[f"S_alpha_{a:g}_mu_{mu:g}"] = np.array([entropy(m, T) for T in T_GRID])
    return cols, {"T": "1/length"}, [MU_EQUALS_KAPPA_NOTE]


FIGURES = {
    "fig1": (_fig1, "omega R", "phase shift", False),
    "fig2": (_fig2, "T R", "entropy S", True),
    "fig3": (_fig3, "omega", "phase shift", False),
    "fig4": (_fig4, "T", "entropy S", True),
}


def figure_data(name: str):
    """``(columns, units, notes)`` for one figure."""
    return FIGURES[name][0]()


def curve_order_holds(columns: dict, strict: bool = False) -> bool:
    """True if the data columns (after the grid) are ordered top to bottom pointwise.

    For fig4 only the dashed ``alpha < 0`` curves carry an order.
    """
    names = [k for k in list(columns)[1:] if not k.startswith("S_alpha_1_")]
    for upper, lower in zip(names[:-1], names[1:]):
        a, b = np.asarray(columns[upper]), np.asarray(columns[lower])
        if strict and not np.all(a > b):
            return False
        if not np.all(a >= b):
            return False
    return True


def write_figures(output_dir) -> list[Path]:
    """Write ``figN.csv`` and ``figN.svg`` for all four figures; returns the paths."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (build, xlabel, ylabel, logx) in FIGURES.items():
        cols, units, notes = build()
        csv_path = out / f"{name}.csv"
        csv_path.write_text(format_csv(cols, units, notes), encoding="ascii")
        xkey = next(iter(cols))
        series = {k: v for k, v in cols.items() if k != xkey}
        dashed = {k: "6,3" for k in series if "alpha_-1_mu" in k}
        svg_path = out / f"{name}.svg"
        svg_path.write_text(
            line_plot(cols[xkey], series, xlabel=xlabel, ylabel=ylabel, title=name, logx=logx, dashed=dashed),
            encoding="ascii",
        )
        written += [csv_path, svg_path]
    return written
