"""Photon statistics: moments, G2(0), peak/width metrics and G2(0) = 1 sweeps."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import MOMENT_TAIL_TOL, NMAX_LIMIT, NORMALIZATION_TOL
from .errors import NotNormalized, ZeroMeanField
from .states import FieldSpec, Pcd, pcd, pcd_closed_form

SWEEP_POINTS = 121
CROSSING_XTOL = 1e-4
CROSSING_FTOL = 1e-6
#: |g2 - 1| below this at a grid point counts as an exact zero-HBT point
GRID_ZERO_TOL = 1e-9


class Axis(str, enum.Enum):
    over_NS = "over_NS"
    over_NTH = "over_NTH"


@dataclass(frozen=True)
class SweepResult:
    axis: Axis
    points: list[tuple[float, float]]
    crossings: list[float]


def moments(p: Pcd) -> tuple[float, float]:
    """<n> and <n^2>, renormalized over the truncation deficit."""
    if abs(p.deficit) > NORMALIZATION_TOL:
        raise NotNormalized(f"PCD deficit {p.deficit:.3e} exceeds {NORMALIZATION_TOL}")
    n = np.arange(p.probs.size, dtype=float)
    total = p.probs.sum()
    return float(n @ p.probs / total), float((n * n) @ p.probs / total)


def g2_zero(p: Pcd) -> float:
    """(<n^2> - <n>) / <n>^2."""
    mean, mean_sq = moments(p)
    if mean <= 0:
        raise ZeroMeanField("G2(0) undefined for a field with <n> = 0")
    return (mean_sq - mean) / mean**2


def g2_of(spec: FieldSpec) -> float:
    """G2(0) of a field, extending the closed-form PCD until its tail is negligible."""
    p = pcd(spec)
    if spec.n_th > 0:
        while p.probs[-1] * p.n_max**2 > MOMENT_TAIL_TOL and 2 * p.n_max <= NMAX_LIMIT:
            p = pcd_closed_form(spec, 2 * p.n_max)
    return g2_zero(p)


def peak_and_width(p: Pcd) -> tuple[int, float, float]:
    """Peak position, peak height and interpolated full width at half maximum.

    The half-maximum crossings are found by linear interpolation between
    neighbouring integers; if the distribution never drops below half on a
    side, that side ends at the support boundary.
    """
    probs = p.probs
    k = int(np.argmax(probs))  # first maximum: ties go to smaller n
    peak = float(probs[k])
    half = 0.5 * peak

    left = 0.0
    for i in range(k, 0, -1):
        if probs[i - 1] < half:
            left = (i - 1) + (half - probs[i - 1]) / (probs[i] - probs[i - 1])
            break
    right = float(probs.size - 1)
    for i in range(k, probs.size - 1):
        if probs[i + 1] < half:
            right = i + (probs[i] - half) / (probs[i] - probs[i + 1])
            break
    return k, peak, right - left


def _with_param(base: FieldSpec, axis: Axis, x: float) -> FieldSpec:
    return base.with_(n_s=x) if axis is Axis.over_NS else base.with_(n_th=x)


def _bisect(f: Callable[[float], float], lo: float, hi: float, flo: float) -> float:
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0 or (hi - lo < CROSSING_XTOL and abs(fm) < CROSSING_FTOL):
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return mid


def g2_sweep(
    base: FieldSpec,
    axis: Axis | str,
    lo: float,
    hi: float,
    n_points: int = SWEEP_POINTS,
    g2: Callable[[FieldSpec], float] = g2_of,
) -> SweepResult:
    """G2(0) on a uniform grid in N_S or N_th, with G2(0) = 1 crossings refined
    by bisection."""
    axis = Axis(axis)
    if lo < 0 or hi <= lo or n_points < 2:
        raise ValueError("sweep needs 0 <= lo < hi and at least two points")
    xs = np.linspace(lo, hi, n_points)
    vals = [g2(_with_param(base, axis, float(x))) for x in xs]
    f = lambda x: g2(_with_param(base, axis, x)) - 1.0  # noqa: E731
    dev = [v - 1.0 for v in vals]

    crossings = []
    for i, x in enumerate(xs):
        if abs(dev[i]) <= GRID_ZERO_TOL:
            crossings.append(float(x))
    for i in range(n_points - 1):
        a, b = dev[i], dev[i + 1]
        if abs(a) <= GRID_ZERO_TOL or abs(b) <= GRID_ZERO_TOL:
            continue
        if (a < 0) != (b < 0):
            crossings.append(_bisect(f, float(xs[i]), float(xs[i + 1]), a))
    crossings.sort()
    return SweepResult(axis, [(float(x), float(v)) for x, v in zip(xs, vals)], crossings)


def squeezed_vacuum_g2(n_s: float) -> float:
    """Analytic G2(0) of squeezed vacuum, 3 + 1/N_S."""
    if n_s <= 0:
        raise ZeroMeanField("squeezed vacuum with N_S = 0 is the vacuum")
    return 3.0 + 1.0 / n_s

