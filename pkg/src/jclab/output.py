"""CSV and SVG writers. Both write to a temp file and rename into place."""

from __future__ import annotations

import math
import os
import tempfile
from pathlib import Path

FLOAT_FMT = "{:.12g}"
COLORS = ["#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d68910"]


def atomic_write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fmt(x) -> str:
    if isinstance(x, int):
        return str(x)
    return FLOAT_FMT.format(float(x))


def csv_text(header: tuple[str, str], rows, trailer: str | None = None) -> str:
    lines = [",".join(header)]
    lines += [f"{fmt(a)},{fmt(b)}" for a, b in rows]
    if trailer is not None:
        lines.append(trailer)
    return "\n".join(lines) + "\n"


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=10 * mag)
    start = math.ceil(lo / step) * step
    out, v = [], start
    while v <= hi + 1e-9 * step:
        out.append(round(v, 12))
        v += step
    return out


def svg_text(series, title: str = "", xlabel: str = "", ylabel: str = "",
             width: int = 720, height: int = 420) -> str:
    """Line plot of ``series`` = [(xs, ys, label), ...]."""
    ml, mr, mt, mb = 70, 20, 36, 50
    xs_all = [float(x) for xs, _, _ in series for x in xs]
    ys_all = [float(y) for _, ys, _ in series for y in ys]
    x0, x1 = min(xs_all), max(xs_all)
    y0, y1 = min(ys_all), max(ys_all)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pw, ph = width - ml - mr, height - mt - mb

    def sx(x):
        return ml + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return mt + (1 - (y - y0) / (y1 - y0)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in _ticks(x0, x1):
        X = sx(t)
        out.append(f'<line x1="{X:.2f}" y1="{mt + ph}" x2="{X:.2f}" y2="{mt + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{X:.2f}" y="{mt + ph + 18}" text-anchor="middle">{t:g}</text>')
    for t in _ticks(y0, y1):
        Y = sy(t)
        out.append(f'<line x1="{ml - 5}" y1="{Y:.2f}" x2="{ml}" y2="{Y:.2f}" stroke="black"/>')
        out.append(f'<text x="{ml - 8}" y="{Y + 4:.2f}" text-anchor="end">{t:g}</text>')
    for i, (xs, ys, label) in enumerate(series):
        pts = " ".join(f"{sx(float(x)):.2f},{sy(float(y)):.2f}" for x, y in zip(xs, ys))
        color = COLORS[i % len(COLORS)]
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{pts}"/>')
        if label:
            out.append(f'<text x="{ml + pw - 8}" y="{mt + 16 + 14 * i}" text-anchor="end" '
                       f'fill="{color}">{label}</text>')
    if title:
        out.append(f'<text x="{width / 2}" y="22" text-anchor="middle" font-size="14">{title}</text>')
    if xlabel:
        out.append(f'<text x="{ml + pw / 2}" y="{height - 12}" text-anchor="middle">{xlabel}</text>')
    if ylabel:
        out.append(f'<text x="16" y="{mt + ph / 2}" text-anchor="middle" '
                   f'transform="rotate(-90 16 {mt + ph / 2})">{ylabel}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
