"""Plain-text formats: CSV tables and the piecewise-constant potential file.

Potential file::

    # comments run to end of line
    geometry: full          # or: half
    -1.0  -4.0              # breakpoint, height on [this, next breakpoint)
     1.0                    # last breakpoint; height omitted or 0

ASCII, whitespace-delimited.
"""
from __future__ import annotations

import csv
import io as _io
from pathlib import Path

import numpy as np

from .solver import PiecewiseConstantPotential

__all__ = ["PotentialFileError", "parse_potential", "read_potential", "format_csv", "read_csv"]


class PotentialFileError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_potential(text: str) -> PiecewiseConstantPotential:
    geometry = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.isascii():
            raise PotentialFileError("non-ASCII characters", lineno)
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if geometry is None:
            key, sep, value = line.partition(":")
            if not sep or key.strip() != "geometry" or value.strip() not in ("full", "half"):
                raise PotentialFileError("expected 'geometry: full' or 'geometry: half'", lineno)
            geometry = value.strip()
            continue
        fields = line.split()
        if len(fields) not in (1, 2):
            raise PotentialFileError("expected 'breakpoint height'", lineno)
        try:
            values = [float(f) for f in fields]
        except ValueError:
            raise PotentialFileError(f"not a number in {line!r}", lineno) from None
        if not all(np.isfinite(values)):
            raise PotentialFileError("non-finite value", lineno)
        rows.append((lineno, values))
    if geometry is None:
        raise PotentialFileError("missing geometry header")
    if len(rows) < 2:
        raise PotentialFileError("need at least two breakpoints")
    for lineno, values in rows[:-1]:
        if len(values) != 2:
            raise PotentialFileError("height missing", lineno)
    last_line, last = rows[-1]
    if len(last) == 2 and last[1] != 0:
        raise PotentialFileError("potential must vanish beyond the last breakpoint", last_line)
    breakpoints = [v[0] for _, v in rows]
    for (lineno, _), a, b in zip(rows[1:], breakpoints[:-1], breakpoints[1:]):
        if not b > a:
            raise PotentialFileError("breakpoints must be strictly increasing", lineno)
    heights = [v[1] for _, v in rows[:-1]]
    try:
        return PiecewiseConstantPotential(tuple(breakpoints), tuple(heights), geometry)
    except ValueError as exc:
        raise PotentialFileError(str(exc)) from None


def read_potential(path) -> PiecewiseConstantPotential:
    return parse_potential(Path(path).read_text(encoding="ascii", errors="strict"))


def _cell(v):
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


def format_csv(columns: dict, units: dict | None = None, notes=()) -> str:
    """Table as CSV text: comment lines, then a header row, then rows.

    Numbers use 17 significant digits so parsing recovers them exactly.
    """
    units = units or {}
    names = list(columns)
    buf = _io.StringIO()
    buf.write("# columns: " + ", ".join(f"{n} [{units.get(n, '1')}]" for n in names) + "\n")
    for note in notes:
        buf.write(f"# {note}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    n = len(next(iter(columns.values()))) if names else 0
    for i in range(n):
        writer.writerow([_cell(columns[k][i]) for k in names])
    return buf.getvalue()


def read_csv(text: str) -> dict:
    """Inverse of :func:`format_csv`; comment lines are skipped."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader)
    cols = {h: [] for h in header}
    for row in reader:
        for h, v in zip(header, row):
            cols[h].append(v)
    out = {}
    for h, v in cols.items():
        try:
            out[h] = np.array([float(x) for x in v])
        except ValueError:
            out[h] = np.array(v)
    return out
