"""Minimal deterministic SVG line plots (write-only convenience output)."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

__all__ = ["write_line_svg"]

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2")


def _transform(values: Sequence[float], log: bool) -> list[float]:
    if log:
        return [math.log10(v) for v in values]
    return list(values)


def write_line_svg(
    path: str | Path,
    series: dict[str, tuple[Sequence[float], Sequence[float]]],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    logx: bool = False,
    logy: bool = False,
    width: int = 640,
    height: int = 420,
) -> None:
    """One polyline per named series, shared axes, fixed formatting."""
    pad = 56.0
    xs_all: list[float] = []
    ys_all: list[float] = []
    txs: dict[str, list[float]] = {}
    tys: dict[str, list[float]] = {}
    for name, (xs, ys) in series.items():
        txs[name] = _transform(xs, logx)
        tys[name] = _transform(ys, logy)
        xs_all.extend(txs[name])
        ys_all.extend(tys[name])
    if not xs_all:
        raise ValueError("nothing to plot")
    x_lo, x_hi = min(xs_all), max(xs_all)
    y_lo, y_hi = min(ys_all), max(ys_all)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0

    def sx(v: float) -> float:
        return pad + (v - x_lo) / x_span * (width - 2 * pad)

    def sy(v: float) -> float:
        return height - pad - (v - y_lo) / y_span * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad:.2f}" y1="{height - pad:.2f}" x2="{width - pad:.2f}" '
        f'y2="{height - pad:.2f}" stroke="black"/>',
        f'<line x1="{pad:.2f}" y1="{pad:.2f}" x2="{pad:.2f}" y2="{height - pad:.2f}" stroke="black"/>',
    ]
    if title:
        parts.append(f'<text x="{width / 2:.2f}" y="24" text-anchor="middle" font-size="15">{title}</text>')
    if xlabel:
        label = xlabel + (" (log10)" if logx else "")
        parts.append(
            f'<text x="{width / 2:.2f}" y="{height - 14:.2f}" text-anchor="middle" font-size="12">{label}</text>'
        )
    if ylabel:
        label = ylabel + (" (log10)" if logy else "")
        parts.append(
            f'<text x="16" y="{height / 2:.2f}" text-anchor="middle" font-size="12" '
            f'transform="rotate(-90 16 {height / 2:.2f})">{label}</text>'
        )
    for ticks, horizontal in ((5, True), (5, False)):
        for i in range(ticks + 1):
            frac = i / ticks
            if horizontal:
                v = x_lo + frac * x_span
                px = sx(v)
                parts.append(
                    f'<line x1="{px:.2f}" y1="{height - pad:.2f}" x2="{px:.2f}" '
                    f'y2="{height - pad + 5:.2f}" stroke="black"/>'
                )
                parts.append(
                    f'<text x="{px:.2f}" y="{height - pad + 18:.2f}" text-anchor="middle" '
                    f'font-size="10">{v:.3g}</text>'
                )
            else:
                v = y_lo + frac * y_span
                py = sy(v)
                parts.append(f'<line x1="{pad - 5:.2f}" y1="{py:.2f}" x2="{pad:.2f}" y2="{py:.2f}" stroke="black"/>')
                parts.append(
                    f'<text x="{pad - 8:.2f}" y="{py + 3:.2f}" text-anchor="end" font-size="10">{v:.3g}</text>'
                )
    for idx, name in enumerate(series):
        color = _COLORS[idx % len(_COLORS)]
        points = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(txs[name], tys[name]))
        parts.append(f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        parts.append(
            f'<text x="{width - pad + 4:.2f}" y="{pad + 14 * idx + 10:.2f}" font-size="11" '
            f'fill="{color}">{name}</text>'
        )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
