"""Command-line front end.

Subcommands: ``phase``, ``entropy``, ``asymptote``, ``figures``, ``solver``.
Exit codes: 0 success, 2 usage/config error, 3 domain error, 4 numerical
non-convergence.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import figures as _figures
from .formats import PotentialFileError, format_csv, read_potential
from .levinson import measure_potential, verify_model
from .models import (
    DeltaPotentialParams,
    DomainError,
    PlasmaPointParams,
    make_spectral_model,
)
from .numerics import QuadratureError, QuadratureSpec
from .solver import (
    BoundStateSearchError,
    PiecewiseConstantPotential,
    bound_states_numeric,
    half_line_jost,
    phase_shift,
    spectral_model,
    transmission,
)
from .svgplot import line_plot
from .thermo import high_temperature_form, thermo_sweep

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NUMERICS = 4


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    lo: float
    hi: float
    points: int
    log: bool

    def values(self):
        if self.log:
            return np.geomspace(self.lo, self.hi, self.points)
        return np.linspace(self.lo, self.hi, self.points)


def parse_grid(text: str, default_log: bool) -> Grid:
    """``min:max:points[:log|lin]``."""
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise ConfigError(f"grid {text!r} is not min:max:points[:log|lin]")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"grid {text!r} has non-numeric fields") from None
    log = default_log if len(parts) == 3 else parts[3] == "log"
    if len(parts) == 4 and parts[3] not in ("log", "lin"):
        raise ConfigError("grid spacing must be 'log' or 'lin'")
    if not lo < hi:
        raise ConfigError("grid needs min < max")
    if n < 2:
        raise ConfigError("grid needs at least 2 points")
    if log and lo <= 0:
        raise ConfigError("log grid needs min > 0")
    return Grid(lo, hi, n, log)


def _broadcast(*lists):
    n = max(len(x) for x in lists)
    out = []
    for x in lists:
        if len(x) not in (1, n):
            raise ConfigError("parameter lists must have equal length or length 1")
        out.append(list(x) * n if len(x) == 1 else list(x))
    return list(zip(*out))


def build_models(args):
    """``[(label, SpectralModel, params_or_potential)]`` from parsed options."""
    kind = args.model
    if kind == "plasma":
        return [
            (f"OmegaR_{O * R:g}", make_spectral_model(PlasmaPointParams(O, R)), PlasmaPointParams(O, R))
            for O, R in _broadcast(args.Omega, args.R)
        ]
    if kind == "delta":
        models = []
        for a, mu in _broadcast(args.alpha, args.mu if args.mu is not None else [None]):
            if mu is None:
                mu = 0.0 if a > 0 else -a + 1.0
            p = DeltaPotentialParams(a, mu)
            models.append((f"alpha_{a:g}_mu_{mu:g}", make_spectral_model(p), p))
        return models
    path = Path(kind)
    if not path.exists():
        raise ConfigError(f"--model must be 'plasma', 'delta' or a potential file; {kind!r} not found")
    pot = read_potential(path)
    mu = args.mu[0] if args.mu else None
    return [(path.stem, spectral_model(pot, mu), pot)]


def _quad_spec(args):
    return QuadratureSpec(rel_tol=args.tol) if args.tol else QuadratureSpec()


def _emit(args, columns, units, notes=(), xlabel="", ylabel="", logx=False, payload=None):
    fmt = args.format
    if fmt == "csv":
        text = format_csv(columns, units, notes)
    elif fmt == "json":
        doc = payload if payload is not None else {k: [float(v) for v in vals] for k, vals in columns.items()}
        if notes and payload is None:
            doc = {"columns": doc, "notes": list(notes)}
        text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    else:
        xkey = next(iter(columns))
        series = {k: v for k, v in columns.items() if k != xkey}
        text = line_plot(columns[xkey], series, xlabel=xlabel, ylabel=ylabel, logx=logx)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def cmd_phase(args):
    models = build_models(args)
    grid = parse_grid(args.grid, False) if args.grid else Grid(0.0, args.omega_cap, 2001, False)
    w = grid.values()
    cols = {"omega": w}
    units = {"omega": "1/length"}
    for label, model, _ in models:
        cols[f"delta_{label}"] = model.phase(w)
        cols[f"ddelta_{label}"] = model.phase_derivative(np.where(w > 0, w, 1e-12))
        units[f"delta_{label}"] = "rad"
        units[f"ddelta_{label}"] = "rad*length"
    if args.format == "svg":
        cols = {k: v for k, v in cols.items() if not k.startswith("ddelta_")}
    _emit(args, cols, units, xlabel="omega", ylabel="phase shift", logx=grid.log)


def cmd_entropy(args):
    models = build_models(args)
    grid = parse_grid(args.grid, True) if args.grid else Grid(0.01, 100.0, 400, True)
    T = grid.values()
    spec = _quad_spec(args)
    cols = {"T": T}
    units = {"T": "1/length"}
    for label, model, _ in models:
        samples = thermo_sweep(model, T, with_free_energy=args.free_energy, spec=spec)
        cols[f"S_{label}"] = np.array([s.entropy for s in samples])
        if args.free_energy:
            cols[f"F_{label}"] = np.array([s.free_energy for s in samples])
            units[f"F_{label}"] = "1/length"
    _emit(args, cols, units, xlabel="T", ylabel="entropy", logx=grid.log)


def cmd_asymptote(args):
    models = build_models(args)
    spec = _quad_spec(args)
    reports = []
    for label, model, source in models:
        scale = model.frequency_scale
        grid = parse_grid(args.grid, True) if args.grid else Grid(1e2 * scale, 1e4 * scale, 9, True)
        sweep = thermo_sweep(model, grid.values(), with_free_energy=False, spec=spec)
        report = verify_model(model, sweep, tolerance=args.levinson_tol).to_dict()
        report["label"] = label
        try:
            form = high_temperature_form(model, spec)
            report["predicted_constant"] = form.constant
        except NotImplementedError:
            report["predicted_constant"] = None
        if isinstance(source, PiecewiseConstantPotential):
            report["bound_states"] = [s._asdict() for s in bound_states_numeric(source)]
            if source.geometry == "full":
                m = measure_potential(source)
                report["critical"] = m.critical
                report["delta_plus_zero"] = m.delta_plus_zero
                report["delta_minus_zero"] = m.delta_minus_zero
        reports.append(report)
    if args.format == "csv":
        keys = ["label", "predicted_log_coeff", "measured_log_coeff", "measured_constant", "consistent"]
        cols = {k: [r[k] if isinstance(r[k], str) else float(r[k]) for r in reports] for k in keys}
        text = format_csv(cols)
        if args.out:
            Path(args.out).write_text(text, encoding="ascii")
        else:
            sys.stdout.write(text)
        return
    args.format = "json"
    _emit(args, {}, {}, payload=reports if len(reports) > 1 else reports[0])


def cmd_figures(args):
    out = Path(args.out or "figures")
    for path in _figures.write_figures(out):
        print(path)


def cmd_solver(args):
    path = Path(args.model)
    if args.model in ("plasma", "delta") or not path.exists():
        raise ConfigError("solver needs --model pointing at a potential file")
    pot = read_potential(path)
    grid = parse_grid(args.grid, False) if args.grid else Grid(0.01, args.omega_cap, 400, False)
    w = grid.values()
    if np.any(w <= 0):
        raise ConfigError("solver frequencies must be positive")
    amp = transmission(pot, w) if pot.geometry == "full" else half_line_jost(pot, w)
    key = "t" if pot.geometry == "full" else "f"
    delta = phase_shift(pot, w)
    states = bound_states_numeric(pot)
    cols = {"omega": w, f"re_{key}": amp.real, f"im_{key}": amp.imag, "delta": delta}
    units = {"omega": "1/length", "delta": "rad"}
    notes = [f"bound_state kappa={s.kappa:.17g} parity={s.parity}" for s in states]
    payload = None
    if args.format == "json":
        payload = {
            "geometry": pot.geometry,
            "rows": [
                {"omega": float(a), f"re_{key}": float(b.real), f"im_{key}": float(b.imag), "delta": float(d)}
                for a, b, d in zip(w, amp, delta)
            ],
            "bound_states": [s._asdict() for s in states],
        }
    _emit(args, cols, units, notes, xlabel="omega", ylabel="value", payload=payload)


COMMANDS = {
    "phase": cmd_phase,
    "entropy": cmd_entropy,
    "asymptote": cmd_asymptote,
    "figures": cmd_figures,
    "solver": cmd_solver,
}


def make_parser():
    parser = argparse.ArgumentParser(prog="scatentropy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--model", default="plasma", help="plasma, delta, or a potential file path")
        p.add_argument("--Omega", type=float, nargs="+", default=[1.0])
        p.add_argument("--R", type=float, nargs="+", default=[1.0])
        p.add_argument("--alpha", type=float, nargs="+", default=[1.0])
        p.add_argument("--mu", type=float, nargs="+", default=None)
        p.add_argument("--grid", help="min:max:points[:log|lin]")
        p.add_argument("--omega-cap", type=float, default=20.0, help="upper frequency of default phase grids")
        p.add_argument("--format", choices=("csv", "json", "svg"), default="json" if name == "asymptote" else "csv")
        p.add_argument("--out", help="output file (directory for 'figures')")
        p.add_argument("--tol", type=float, help="relative quadrature tolerance")
        if name == "entropy":
            p.add_argument("--free-energy", action="store_true", help="add free-energy columns")
        if name == "asymptote":
            p.add_argument("--levinson-tol", type=float, default=0.01)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except (ConfigError, PotentialFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (QuadratureError, BoundStateSearchError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
