"""Resonant Jaynes-Cummings dynamics of a two-level atom and one field mode.

Joint basis ordering: |e,0>, ..., |e,n_max>, |g,0>, ..., |g,n_max>.
In the interaction picture the propagator is a direct sum of 2x2 rotations
on the doublets {|e,n>, |g,n+1>} with angle lambda sqrt(n+1) t; |g,0> is
invariant. |e,n_max> would couple to |g,n_max+1>, which lies outside the
truncation, and is left invariant so that the propagator stays unitary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import JC_TAIL_TOL, TRACE_TOL
from .errors import InvalidDensity
from .fock import hermitian_eigenvalues
from .states import Pcd, check_density

T_MAX = 50.0
T_POINTS = 2001


@dataclass(frozen=True)
class JcParams:
    lam: float = 1.0
    omega: float = 1.0
    omega0: float = 1.0

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError("coupling lambda must be positive")
        if self.omega != self.omega0:
            raise ValueError("only the resonant model (omega == omega0) is supported")

    @property
    def detuning(self) -> float:
        return self.omega - self.omega0


@dataclass(frozen=True)
class JointState:
    matrix: np.ndarray

    @property
    def field_dim(self) -> int:
        return self.matrix.shape[0] // 2

    @property
    def n_max(self) -> int:
        return self.field_dim - 1


@dataclass(frozen=True)
class TimeSeries:
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if t.shape != v.shape:
            raise ValueError("times and values differ in length")
        if t.size > 1 and np.any(np.diff(t) <= 0):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)


def default_times(t_max: float = T_MAX, n: int = T_POINTS) -> np.ndarray:
    return np.linspace(0.0, t_max, n)


def trim_field(rho: np.ndarray, tail_tol: float = JC_TAIL_TOL) -> np.ndarray:
    """Drop Fock levels whose cumulative tail population is below ``tail_tol``."""
    p = np.real(np.diag(rho))
    tail = np.cumsum(p[::-1])[::-1]  # tail[n] = sum_{k >= n} p_k
    above = np.nonzero(tail > tail_tol)[0]
    n_cut = max(int(above[-1]) if above.size else 0, 1)
    return rho[: n_cut + 1, : n_cut + 1]


def initial_joint(field: np.ndarray) -> JointState:
    """|e><e| (x) rho_field."""
    field = np.asarray(field, dtype=complex)
    if field.ndim != 2 or field.shape[0] != field.shape[1] or field.shape[0] < 2:
        raise InvalidDensity("field must be a square matrix of dimension >= 2")
    check_density(field, trace_tol=TRACE_TOL)
    d = field.shape[0]
    m = np.zeros((2 * d, 2 * d), dtype=complex)
    m[:d, :d] = field
    return JointState(m)


def _angles(d: int, lam_t: float) -> tuple[np.ndarray, np.ndarray]:
    theta = lam_t * np.sqrt(np.arange(1, d))
    return np.cos(theta), np.sin(theta)


def propagator(n_max: int, lam_t: float) -> np.ndarray:
    """Dense interaction-picture propagator exp(-i lambda t (s+ a + s- a^dag))."""
    d = n_max + 1
    c, s = _angles(d, lam_t)
    u = np.zeros((2 * d, 2 * d), dtype=complex)
    e = np.arange(d - 1)
    g = d + e + 1
    u[e, e] = c
    u[g, g] = c
    u[e, g] = -1j * s
    u[g, e] = -1j * s
    u[d - 1, d - 1] = 1.0
    u[d, d] = 1.0
    return u


def _rotate_rows(m: np.ndarray, c: np.ndarray, s: np.ndarray) -> np.ndarray:
    d = m.shape[0] // 2
    out = m.copy()
    e, g = m[: d - 1], m[d + 1 :]
    out[: d - 1] = c[:, None] * e - 1j * s[:, None] * g
    out[d + 1 :] = -1j * s[:, None] * e + c[:, None] * g
    return out


def evolve(state: JointState, params: JcParams, t: float) -> JointState:
    """U(t) rho U(t)^dag, applied doublet by doublet."""
    d = state.field_dim
    c, s = _angles(d, params.lam * t)
    out = _rotate_rows(state.matrix, c, s)
    # right action of U^dag on the columns
    e, g = out[:, : d - 1].copy(), out[:, d + 1 :]
    out[:, : d - 1] = e * c + g * (1j * s)
    out[:, d + 1 :] = e * (1j * s) + g * c
    return JointState(out)


def purity(state: JointState) -> float:
    return float(np.sum(np.abs(state.matrix) ** 2))


def atomic_inversion(state: JointState) -> float:
    diag = np.real(np.diag(state.matrix))
    d = state.field_dim
    return float(diag[:d].sum() - diag[d:].sum())


def inversion_diagonal(pcd: Pcd, params: JcParams, times) -> TimeSeries:
    """W(t) = sum_n P(n) cos(2 lambda sqrt(n+1) t)."""
    times = np.asarray(times, dtype=float)
    rabi = 2.0 * params.lam * np.sqrt(np.arange(pcd.probs.size) + 1.0)
    return TimeSeries(times, np.cos(np.outer(times, rabi)) @ pcd.probs)


def inversion_full(state: JointState, params: JcParams, times) -> TimeSeries:
    """W(t) = tr(rho(t) sigma_z (x) 1) from the propagated joint state."""
    times = np.asarray(times, dtype=float)
    vals = [atomic_inversion(evolve(state, params, t)) for t in times]
    return TimeSeries(times, np.array(vals))


def partial_transpose(matrix: np.ndarray, over: str = "atom") -> np.ndarray:
    """Partial transpose of a 2 x d joint matrix over the atom or the field."""
    d = matrix.shape[0] // 2
    blocks = [[matrix[:d, :d], matrix[:d, d:]], [matrix[d:, :d], matrix[d:, d:]]]
    if over == "atom":
        return np.block([[blocks[0][0], blocks[1][0]], [blocks[0][1], blocks[1][1]]])
    if over == "field":
        return np.block([[b.T for b in row] for row in blocks])
    raise ValueError("over must be 'atom' or 'field'")


def negativity_of(state: JointState, over: str = "atom") -> float:
    lam = hermitian_eigenvalues(partial_transpose(state.matrix, over))
    return float(np.sum(np.abs(lam) - lam) / 2.0)


def negativity(state: JointState, params: JcParams, times, method: str = "direct") -> TimeSeries:
    """N(t) = sum_k (|l_k| - l_k) / 2 over eigenvalues of the partial transpose.

    ``method="direct"`` diagonalizes the full partially transposed matrix at
    every time. ``method="lowrank"`` propagates the significant eigenvectors
    of the initial state and diagonalizes the reduced problem described in
    :func:`_lowrank_negativity`.
    """
    times = np.asarray(times, dtype=float)
    if method == "direct":
        vals = [negativity_of(evolve(state, params, t)) for t in times]
    elif method == "lowrank":
        w, vecs = _significant_components(state.matrix)
        vals = [_lowrank_negativity(w, vecs, params.lam * t) for t in times]
    else:
        raise ValueError("method must be 'direct' or 'lowrank'")
    return TimeSeries(times, np.array(vals))


def _significant_components(matrix: np.ndarray, tail_tol: float = JC_TAIL_TOL):
    """Eigenpairs of a density matrix, dropping the smallest weights summing below tail_tol.

    A real matrix yields real eigenvectors, which keeps the low-rank route in
    real arithmetic.
    """
    if not np.any(matrix.imag):
        matrix = matrix.real
    w, v = np.linalg.eigh(matrix)
    w = np.clip(w, 0.0, None)
    drop = np.cumsum(w) <= tail_tol  # ascending order
    return w[~drop], v[:, ~drop]


def _lowrank_negativity(w: np.ndarray, vecs: np.ndarray, lam_t: float) -> float:
    """Negativity of sum_k w_k |psi_k(t)><psi_k(t)| with psi_k = U(t) v_k.

    Writing psi_k = |e> x_k + |g> y_k and X = [sqrt(w_k) x_k], Y likewise, the
    atom partial transpose is [[X X^+, Y X^+], [X Y^+, Y Y^+]] = V M V^+ with
    V = diag([X Y], [X Y]) and M a fixed 0/1 permutation. Its nonzero
    spectrum equals that of H^(1/2) M H^(1/2), H = V^+ V.

    Real ``vecs`` are propagated with the real rotation obtained by the
    local phase change |g> -> i|g>, which leaves the negativity unchanged.
    """
    d = vecs.shape[0] // 2
    c, s = _angles(d, lam_t)
    z = vecs * np.sqrt(w)
    if np.isrealobj(z):
        psi = z.copy()
        e, g = z[: d - 1], z[d + 1 :]
        psi[: d - 1] = c[:, None] * e - s[:, None] * g
        psi[d + 1 :] = s[:, None] * e + c[:, None] * g
    else:
        psi = _rotate_rows(z, c, s)
    xy = np.hstack([psi[:d], psi[d:]])  # d x 2K
    k2 = xy.shape[1]
    hv, he = np.linalg.eigh(xy.conj().T @ xy)
    root = (he * np.sqrt(np.clip(hv, 0.0, None))) @ he.conj().T
    k = k2 // 2
    g = np.zeros((2 * k2, 2 * k2), dtype=root.dtype)
    g[:k2, :k2] = root
    g[k2:, k2:] = root
    # M swaps the Y-top and X-bottom blocks and fixes the rest
    perm = np.concatenate(
        [np.arange(k), np.arange(k2, k2 + k), np.arange(k, k2), np.arange(k2 + k, 2 * k2)]
    )
    lam = np.linalg.eigvalsh(g @ g[perm])
    return float(np.sum(np.abs(lam) - lam) / 2.0)


# ---------------------------------------------------------------- shape metrics


def envelope(ts: TimeSeries, width: float = 1.0) -> np.ndarray:
    """Running max of |values| over a centered window of ``width`` in lambda t."""
    v = np.abs(ts.values)
    if ts.times.size < 2:
        return v
    dt = ts.times[1] - ts.times[0]
    half = max(int(round(0.5 * width / dt)), 0)
    padded = np.pad(v, half, mode="edge")
    windows = np.lib.stride_tricks.sliding_window_view(padded, 2 * half + 1)
    return windows.max(axis=1)


def collapse_intervals(ts: TimeSeries, threshold: float = 0.05, min_width: float = 2.0):
    """Spans where the envelope stays below ``threshold`` for at least ``min_width``."""
    quiet = envelope(ts) < threshold
    spans, start = [], None
    for t, q in zip(ts.times, quiet):
        if q and start is None:
            start = t
        elif not q and start is not None:
            spans.append((start, prev))
            start = None
        prev = t
    if start is not None:
        spans.append((start, ts.times[-1]))
    return [(a, b) for a, b in spans if b - a >= min_width]


def window_max(ts: TimeSeries, lo: float, hi: float) -> float:
    sel = (ts.times >= lo) & (ts.times <= hi)
    return float(np.max(np.abs(ts.values[sel])))


def time_average(ts: TimeSeries) -> float:
    return float(np.trapezoid(ts.values, ts.times) / (ts.times[-1] - ts.times[0]))
