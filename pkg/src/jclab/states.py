"""Thermal, coherent, SCTS and CSTS field states and their photon counting
distributions.

Two independent routes give P(l):

* :func:`pcd_oracle` reads the diagonal of the density matrix built from
  matrix-exponential displacement and squeeze operators;
* :func:`pcd_closed_form` evaluates Glauber's R-function expansion, a finite
  sum over Hermite polynomials carried out in log space.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import gammaln, logsumexp

from . import fock
from .constants import (
    HERMITIAN_TOL,
    NMAX_ENV,
    NMAX_LIMIT,
    NMAX_START,
    PROB_CLAMP_TOL,
    PSD_TOL,
    TRACE_TOL,
)
from .errors import DegenerateSqueeze, InvalidDensity, TruncationTooSmall
from .fock import Truncation


class Ordering(str, enum.Enum):
    SCTS = "SCTS"  # D S rho_th S^dag D^dag
    CSTS = "CSTS"  # S D rho_th D^dag S^dag


@dataclass(frozen=True)
class FieldSpec:
    """Mean coherent, squeezed and thermal photon numbers plus phases.

    ``n_c = |alpha|^2`` and ``n_s = sinh(r)^2``; ``squeeze_phase`` is the
    argument of ``zeta = r exp(i phi)``.
    """

    n_c: float
    n_s: float
    n_th: float
    alpha_phase: float = 0.0
    squeeze_phase: float = 0.0
    ordering: Ordering = Ordering.SCTS

    def __post_init__(self):
        for name in ("n_c", "n_s", "n_th"):
            v = getattr(self, name)
            if not (v >= 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be finite and >= 0, got {v}")
        object.__setattr__(self, "ordering", Ordering(self.ordering))

    @property
    def alpha(self) -> complex:
        return math.sqrt(self.n_c) * complex(math.cos(self.alpha_phase), math.sin(self.alpha_phase))

    @property
    def r(self) -> float:
        return math.asinh(math.sqrt(self.n_s))

    @property
    def zeta(self) -> complex:
        return self.r * complex(math.cos(self.squeeze_phase), math.sin(self.squeeze_phase))

    def with_(self, **changes) -> "FieldSpec":
        return replace(self, **changes)


@dataclass(frozen=True)
class Pcd:
    """Photon-number distribution over n = 0..n_max."""

    probs: np.ndarray
    deficit: float

    @classmethod
    def from_probs(cls, probs) -> "Pcd":
        p = np.asarray(probs, dtype=float).copy()
        if p.ndim != 1 or p.size == 0:
            raise InvalidDensity("PCD must be a nonempty 1-d array")
        if np.any(p < -PROB_CLAMP_TOL):
            raise InvalidDensity(f"negative probability {p.min():.3e}")
        p[p < 0] = 0.0
        p.setflags(write=False)
        return cls(p, float(1.0 - p.sum()))

    @property
    def n_max(self) -> int:
        return self.probs.size - 1


@dataclass(frozen=True)
class RFunctionInputs:
    """Gaussian parameters entering Glauber's R-function for the field."""

    a: float
    b: complex
    c: complex
    a_tilde: float
    b_tilde: complex
    c_tilde: complex
    log_r00: float

    @property
    def denominator(self) -> float:
        return (1.0 + self.a) ** 2 - abs(self.b) ** 2


# ---------------------------------------------------------------- thermal


def thermal_occupation(h_nu_over_kt: float) -> float:
    """Bose-Einstein mean photon number 1 / (exp(h nu / k_B T) - 1)."""
    if h_nu_over_kt <= 0:
        raise ValueError("h nu / k_B T must be positive")
    return 1.0 / math.expm1(h_nu_over_kt)


def thermal_probs(n_th: float, dim: int) -> np.ndarray:
    """Geometric law N^n / (1 + N)^(n+1) for n < dim."""
    n = np.arange(dim)
    if n_th == 0:
        return (n == 0).astype(float)
    return np.exp(n * math.log(n_th / (1.0 + n_th)) - math.log1p(n_th))


def coherent_mean(spec: FieldSpec) -> complex:
    """<a> of the field; CSTS uses the reordered displacement of S(zeta) D(alpha)."""
    alpha = spec.alpha
    if spec.ordering is Ordering.SCTS:
        return alpha
    r, phi = spec.r, spec.squeeze_phase
    return alpha * math.cosh(r) - np.conj(alpha) * np.exp(1j * phi) * math.sinh(r)


# ---------------------------------------------------------------- matrix route


def build_density(spec: FieldSpec, tr: Truncation) -> np.ndarray:
    """Density matrix on the retained block 0..n_max.

    Operators act on the padded working space and the result is cut back.
    Raises TruncationTooSmall when the retained trace is below ``1 - 1e-8``.
    """
    d_op = fock.displacement(spec.alpha, tr, full=True)
    s_op = fock.squeeze(spec.zeta, tr, full=True)
    u = d_op @ s_op if spec.ordering is Ordering.SCTS else s_op @ d_op
    w = thermal_probs(spec.n_th, tr.working_dim)
    keep = w > 0
    half = u[:, keep] * np.sqrt(w[keep])
    rho = half @ half.conj().T
    rho = rho[: tr.dim, : tr.dim]
    rho = 0.5 * (rho + rho.conj().T)
    tr_rho = float(np.trace(rho).real)
    if tr_rho < 1.0 - TRACE_TOL:
        raise TruncationTooSmall(f"retained trace {tr_rho:.12f} at n_max={tr.n_max}")
    return rho


def nmax_start() -> int:
    raw = os.environ.get(NMAX_ENV)
    if raw is None:
        return NMAX_START
    try:
        v = int(raw)
    except ValueError as exc:
        raise ValueError(f"{NMAX_ENV} must be an integer, got {raw!r}") from exc
    if v < 1:
        raise ValueError(f"{NMAX_ENV} must be >= 1")
    return v


def density_auto(spec: FieldSpec, start: int | None = None) -> tuple[np.ndarray, Truncation]:
    """Build the density matrix, doubling n_max until the trace criterion holds."""
    n_max = start or nmax_start()
    last = None
    while n_max <= NMAX_LIMIT:
        tr = Truncation(n_max)
        try:
            return build_density(spec, tr), tr
        except TruncationTooSmall as exc:
            last = exc
            n_max *= 2
    raise TruncationTooSmall(f"no adequate truncation up to n_max={NMAX_LIMIT}: {last}")


def pcd_oracle(spec: FieldSpec, tr: Truncation | None = None) -> Pcd:
    """P(l) read off the diagonal of the constructed density matrix."""
    rho = build_density(spec, tr) if tr is not None else density_auto(spec)[0]
    return Pcd.from_probs(np.real(np.diag(rho)))


def check_density(rho: np.ndarray, trace_tol: float = TRACE_TOL) -> None:
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > HERMITIAN_TOL:
        raise InvalidDensity(f"not Hermitian (deviation {herm:.3e})")
    t = np.trace(rho).real
    if abs(t - 1.0) > trace_tol:
        raise InvalidDensity(f"trace {t:.12f} differs from 1")
    lo = np.linalg.eigvalsh(rho)[0]
    if lo < -PSD_TOL:
        raise InvalidDensity(f"negative eigenvalue {lo:.3e}")


# ---------------------------------------------------------------- closed form


def hermite(q: int, x: complex) -> complex:
    """Physicists' Hermite polynomial H_q(x) by three-term recurrence."""
    if q < 0:
        raise ValueError("q must be >= 0")
    h_prev, h = 1.0 + 0j, 2.0 * x
    if q == 0:
        return h_prev
    for k in range(1, q):
        h_prev, h = h, 2.0 * x * h - 2.0 * k * h_prev
    return complex(h)


def r_inputs(spec: FieldSpec) -> RFunctionInputs:
    """A, B, C and their tilde counterparts from the photon numbers.

    B is taken with the sign under which the R-function expansion reproduces
    the density matrix built from :func:`build_density`; C is the field
    mean ``<a>``.
    """
    nth, r, phi = spec.n_th, spec.r, spec.squeeze_phase
    sh, ch = math.sinh(r), math.cosh(r)
    a = nth + (2 * nth + 1) * sh * sh
    b = (2 * nth + 1) * np.exp(1j * phi) * sh * ch
    c = complex(coherent_mean(spec))
    den = (1 + a) ** 2 - abs(b) ** 2
    a_t = (a * (1 + a) - abs(b) ** 2) / den
    b_t = b / den
    c_t = ((1 + a) * c + b * np.conj(c)) / den
    log_r00 = -0.5 * math.log(den) - ((1 + a) * abs(c) ** 2 + (b * np.conj(c) ** 2).real) / den
    return RFunctionInputs(a, complex(b), c, float(a_t), complex(b_t), complex(c_t), float(log_r00))


def tilde_direct(spec: FieldSpec) -> tuple[float, complex, complex]:
    """A~, B~, C~ written straight in terms of N_th and r."""
    nth, r, phi = spec.n_th, spec.r, spec.squeeze_phase
    c = complex(coherent_mean(spec))
    h = nth + 0.5
    den = nth * nth + h * (1 + math.cosh(2 * r))
    a_t = nth * (nth + 1) / den
    b_t = np.exp(1j * phi) * h * math.sinh(2 * r) / den
    c_t = (c * (0.5 + h * math.cosh(2 * r)) + np.conj(c) * np.exp(1j * phi) * h * math.sinh(2 * r)) / den
    return a_t, complex(b_t), complex(c_t)


def log_abs_scaled_hermite(q_max: int, c: complex, b: complex) -> np.ndarray:
    """log|K_q| for q = 0..q_max, where K_q = s^q H_q(c / (2 s)), s^2 = b / 2.

    Uses K_{q+1} = c K_q - q b K_{q-1}, which stays regular as b -> 0, with
    running rescaling so that large q neither overflows nor underflows.
    """
    out = np.full(q_max + 1, -np.inf)
    out[0] = 0.0
    if q_max == 0:
        return out
    k_prev, k_cur, shift = 1.0 + 0j, complex(c), 0.0
    out[1] = math.log(abs(k_cur)) if k_cur != 0 else -np.inf
    for q in range(1, q_max):
        k_next = c * k_cur - q * b * k_prev
        k_prev, k_cur = k_cur, k_next
        m = max(abs(k_prev), abs(k_cur))
        if m > 1e150 or 0 < m < 1e-150:
            k_prev, k_cur = k_prev / m, k_cur / m
            shift += math.log(m)
        out[q + 1] = math.log(abs(k_cur)) + shift if k_cur != 0 else -np.inf
    return out


HERMITE_VARIANTS = ("b_tilde", "b_plain")


def pcd_closed_form(spec: FieldSpec, n_max: int, variant: str = "b_tilde") -> Pcd:
    """Closed-form P(l), l = 0..n_max.

    P(l) = R(0,0) A~^l sum_q binom(l, q) / q! (|B~| / 2A~)^q |H_q(x)|^2

    with Hermite argument ``x = C~ / sqrt(2 B~)`` (``variant="b_tilde"``) or
    ``x = C~ / sqrt(2 B)`` (``variant="b_plain"``, which does not match the
    matrix route and is kept for comparison).
    """
    if variant not in HERMITE_VARIANTS:
        raise ValueError(f"variant must be one of {HERMITE_VARIANTS}")
    ri = r_inputs(spec)
    # A~ = N_th (N_th + 1) / D2 vanishes exactly only without thermal photons
    if spec.n_th == 0 or ri.a_tilde <= 0.0:
        raise DegenerateSqueeze("A~ = 0 without thermal photons; use pcd_oracle")
    b = ri.b_tilde if variant == "b_tilde" else ri.b
    if b == 0:
        log_ratio = 0.0
    else:
        log_ratio = math.log(abs(ri.b_tilde) / abs(b))
    q = np.arange(n_max + 1)
    log_a = math.log(ri.a_tilde)
    with np.errstate(divide="ignore"):
        weight = (
            2.0 * log_abs_scaled_hermite(n_max, ri.c_tilde, b)
            - gammaln(q + 1)
            + q * (log_ratio - log_a)
        )
    lf = gammaln(q + 1)
    lbinom = lf[:, None] - lf[None, :] - gammaln(np.maximum(q[:, None] - q[None, :], 0) + 1)
    terms = np.where(q[None, :] <= q[:, None], lbinom + weight[None, :], -np.inf)
    log_p = ri.log_r00 + q * log_a + logsumexp(terms, axis=1)
    return Pcd.from_probs(np.exp(log_p))


def closed_form_auto(spec: FieldSpec, start: int | None = None, variant: str = "b_tilde") -> Pcd:
    n_max = start or nmax_start()
    while n_max <= NMAX_LIMIT:
        p = pcd_closed_form(spec, n_max, variant)
        if p.deficit <= TRACE_TOL:
            return p
        n_max *= 2
    raise TruncationTooSmall(f"closed-form PCD not normalized by n_max={NMAX_LIMIT}")


def pcd(spec: FieldSpec, n_max: int | None = None) -> Pcd:
    """PCD by the closed form, or by the matrix route when N_th = 0."""
    if spec.n_th == 0:
        return pcd_oracle(spec, Truncation(n_max) if n_max else None)
    if n_max:
        return pcd_closed_form(spec, n_max)
    return closed_form_auto(spec)
