"""Dependency-free SVG line plots for run outputs.

Output is deterministic for identical input (fixed canvas, fixed palette,
fixed float formatting), so rendered files are diffable and byte-stable.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .diagnostics import DiagnosticsRecord, convexity_indicator
from .solver import GridField

__all__ = ["render_svg"]

_W, _H = 640, 400
_ML, _MR, _MT, _MB = 62, 16, 30, 46
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _line_plot(series, title: str, xlabel: str, ylabel: str) -> str:
    if not series:
        raise ValueError("no data to plot")
    for label, xs, ys in series:
        if len(xs) == 0 or len(xs) != len(ys):
            raise ValueError(f"series {label!r} is empty or mismatched")

    xmin = min(min(xs) for _, xs, _ in series)
    xmax = max(max(xs) for _, xs, _ in series)
    ymin = min(min(ys) for _, _, ys in series)
    ymax = max(max(ys) for _, _, ys in series)
    if xmax == xmin:
        xmin, xmax = xmin - 0.5, xmax + 0.5
    if ymax == ymin:
        ymin, ymax = ymin - 0.5, ymax + 0.5
    ypad = 0.05 * (ymax - ymin)
    ymin, ymax = ymin - ypad, ymax + ypad

    px0, px1 = _ML, _W - _MR
    py0, py1 = _H - _MB, _MT

    def sx(v):
        return px0 + (v - xmin) / (xmax - xmin) * (px1 - px0)

    def sy(v):
        return py0 + (v - ymin) / (ymax - ymin) * (py1 - py0)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.0f}" y="18" text-anchor="middle" font-family="sans-serif" font-size="14">{title}</text>',
    ]
    # axes
    out.append(
        f'<path d="M {px0} {py1} L {px0} {py0} L {px1} {py0}" stroke="black" fill="none" stroke-width="1"/>'
    )
    for i in range(5):
        tx = xmin + i * (xmax - xmin) / 4
        ty = ymin + i * (ymax - ymin) / 4
        gx, gy = sx(tx), sy(ty)
        out.append(f'<line x1="{_fmt(gx)}" y1="{py0}" x2="{_fmt(gx)}" y2="{py0 + 4}" stroke="black"/>')
        out.append(
            f'<text x="{_fmt(gx)}" y="{py0 + 17}" text-anchor="middle" font-family="sans-serif" font-size="11">{tx:.4g}</text>'
        )
        out.append(f'<line x1="{px0 - 4}" y1="{_fmt(gy)}" x2="{px0}" y2="{_fmt(gy)}" stroke="black"/>')
        out.append(
            f'<text x="{px0 - 7}" y="{_fmt(gy + 3.5)}" text-anchor="end" font-family="sans-serif" font-size="11">{ty:.4g}</text>'
        )
    out.append(
        f'<text x="{(px0 + px1) / 2:.0f}" y="{_H - 8}" text-anchor="middle" font-family="sans-serif" font-size="12">{xlabel}</text>'
    )
    out.append(
        f'<text x="14" y="{(py0 + py1) / 2:.0f}" text-anchor="middle" font-family="sans-serif" font-size="12" transform="rotate(-90 14 {(py0 + py1) / 2:.0f})">{ylabel}</text>'
    )
    for idx, (label, xs, ys) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in zip(xs, ys))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = _MT + 14 + 16 * idx
        out.append(f'<line x1="{px1 - 150}" y1="{ly - 4}" x2="{px1 - 126}" y2="{ly - 4}" stroke="{color}" stroke-width="1.5"/>')
        out.append(
            f'<text x="{px1 - 120}" y="{ly}" font-family="sans-serif" font-size="11">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _as_labeled_states(data) -> list[tuple[str, GridField]]:
    if isinstance(data, GridField):
        return [("f", data)]
    states = list(data)
    if states and isinstance(states[0], GridField):
        return [(f"series {i}", s) for i, s in enumerate(states)]
    return states


def render_svg(data, kind: str) -> str:
    """Render run data as a standalone SVG document.

    kind 'profile': GridField or [(label, GridField), ...] -> f vs x.
    kind 'indicator': same input -> convexity indicator vs half-cell midpoints.
    kind 'extrema': [DiagnosticsRecord, ...] -> max/min histories vs step.
    kind 'error': [DiagnosticsRecord, ...] -> L1 error history vs step.
    """
    if kind == "profile":
        series = [(label, st.x, st.f) for label, st in _as_labeled_states(data)]
        return _line_plot(series, "solution profile", "x", "f")
    if kind == "indicator":
        series = []
        for label, st in _as_labeled_states(data):
            mid = (np.arange(st.n - 1) + 0.5) * st.h
            series.append((label, mid, convexity_indicator(st.f)))
        return _line_plot(series, "convexity indicator", "x", "p")
    if kind == "extrema":
        records: Sequence[DiagnosticsRecord] = list(data)
        if not records:
            raise ValueError("no data to plot")
        steps = [r.step for r in records]
        series = [
            ("max", steps, [r.f_max for r in records]),
            ("min", steps, [r.f_min for r in records]),
        ]
        return _line_plot(series, "field extrema history", "step", "f")
    if kind == "error":
        records = [r for r in data if r.l1_error is not None]
        if not records:
            raise ValueError("no error data to plot")
        series = [("l1 error", [r.step for r in records], [r.l1_error for r in records])]
        return _line_plot(series, "error history", "step", "l1 error")
    raise ValueError(f"unknown plot kind {kind!r}")
