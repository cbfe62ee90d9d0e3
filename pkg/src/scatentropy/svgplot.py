"""Dependency-free SVG line plots (axes, ticks, legend)."""
from __future__ import annotations

import math
from html import escape

import numpy as np

__all__ = ["line_plot"]

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf")
_DASHES = ("", "6,3", "2,2", "8,3,2,3")


def _nice_ticks(lo, hi, n=6):
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=10 * mag)
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def _fmt(v):
    return f"{v:.4g}"


def line_plot(
    x,
    series: dict,
    *,
    xlabel: str = "",
    ylabel: str = "",
    title: str = "",
    logx: bool = False,
    width: int = 640,
    height: int = 420,
    dashed: dict | None = None,
) -> str:
    """Render curves ``series[label]`` against ``x`` as an SVG document string.

    Output depends only on the inputs, so repeated calls are byte-identical.
    """
    x = np.asarray(x, dtype=float)
    xs = np.log10(x) if logx else x
    ys = {k: np.asarray(v, dtype=float) for k, v in series.items()}
    ymin = min(float(np.nanmin(v)) for v in ys.values())
    ymax = max(float(np.nanmax(v)) for v in ys.values())
    pad = 0.05 * (ymax - ymin or 1.0)
    ymin, ymax = ymin - pad, ymax + pad
    left, right, top, bottom = 70, 20, 40 if title else 20, 50
    pw, ph = width - left - right, height - top - bottom
    x0, x1 = float(xs.min()), float(xs.max())

    def px(v):
        return left + (v - x0) / (x1 - x0) * pw

    def py(v):
        return top + (ymax - v) / (ymax - ymin) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    out.append(f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>')

    if logx:
        xticks = list(range(math.ceil(x0), math.floor(x1) + 1))
        xtick_labels = [f"1e{t}" for t in xticks]
    else:
        xticks = _nice_ticks(x0, x1)
        xtick_labels = [_fmt(t) for t in xticks]
    for t, lab in zip(xticks, xtick_labels):
        X = px(t)
        out.append(f'<line x1="{X:.2f}" y1="{top + ph}" x2="{X:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{X:.2f}" y="{top + ph + 18}" text-anchor="middle">{lab}</text>')
    for t in _nice_ticks(ymin, ymax):
        Y = py(t)
        out.append(f'<line x1="{left - 5}" y1="{Y:.2f}" x2="{left}" y2="{Y:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{Y + 4:.2f}" text-anchor="end">{_fmt(t)}</text>')
    if ymin < 0 < ymax:
        out.append(
            f'<line x1="{left}" y1="{py(0):.2f}" x2="{left + pw}" y2="{py(0):.2f}" stroke="#999" stroke-dasharray="3,3"/>'
        )
    out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 12}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(
        f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {top + ph / 2:.1f})">{escape(ylabel)}</text>'
    )

    dashed = dashed or {}
    for i, (label, y) in enumerate(ys.items()):
        color = _COLORS[i % len(_COLORS)]
        ok = np.isfinite(y)
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(xs[ok], y[ok]))
        dash = dashed.get(label, "")
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash_attr} points="{pts}"/>')
        ly = top + 16 + 16 * i
        lx = left + pw - 150
        out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 24}" y2="{ly - 4}" stroke="{color}" stroke-width="1.5"{dash_attr}/>')
        out.append(f'<text x="{lx + 30}" y="{ly}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
