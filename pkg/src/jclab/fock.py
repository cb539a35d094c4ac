"""Truncated Fock-space operator algebra.

Unitaries are built on a padded working space and cut back to the retained
block ``0..n_max``; the padding absorbs the corruption that exponentiating a
truncated generator introduces near the top of the ladder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .constants import EIG_HERMITIAN_TOL
from .errors import NonFinite, NotHermitian, TruncationTooSmall


def default_pad(n_max: int) -> int:
    return max(32, math.ceil(0.25 * n_max))


@dataclass(frozen=True)
class Truncation:
    """Highest retained Fock level plus buffer levels used during construction."""

    n_max: int
    pad: int | None = None

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.pad is None:
            object.__setattr__(self, "pad", default_pad(self.n_max))
        if self.pad < 0:
            raise ValueError(f"pad must be >= 0, got {self.pad}")

    @property
    def dim(self) -> int:
        """Retained dimension."""
        return self.n_max + 1

    @property
    def working_dim(self) -> int:
        return self.n_max + self.pad + 1


def ladder_ops(tr: Truncation) -> tuple[np.ndarray, np.ndarray]:
    """Annihilation and creation operators on the padded working space."""
    d = tr.working_dim
    a = np.diag(np.sqrt(np.arange(1, d, dtype=float)), k=1).astype(complex)
    return a, a.conj().T


def number_op(dim: int) -> np.ndarray:
    return np.diag(np.arange(dim, dtype=float)).astype(complex)


def matrix_exponential(m: np.ndarray) -> np.ndarray:
    """exp(m) by scaling and squaring with a Pade core (scipy)."""
    m = np.asarray(m)
    if not np.all(np.isfinite(m)):
        raise NonFinite("matrix exponential input has non-finite entries")
    with np.errstate(over="ignore", invalid="ignore"):
        out = scipy.linalg.expm(m)
    if not np.all(np.isfinite(out)):
        raise NonFinite("matrix exponential overflowed")
    return out


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in ascending order."""
    m = np.asarray(m)
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > EIG_HERMITIAN_TOL:
        raise NotHermitian(f"matrix deviates from Hermitian by {dev:.3e}")
    return np.linalg.eigvalsh(m)


def displacement_levels(alpha: complex) -> float:
    """Working dimension the displacement tail needs: mean + 6 sigma + 9."""
    return (abs(alpha) + 3.0) ** 2


def squeeze_levels(r: float) -> float:
    """Same heuristic family as :func:`displacement_levels` for squeezed vacuum."""
    sh, ch = math.sinh(r), math.cosh(r)
    return sh * sh + 6.0 * math.sqrt(2.0) * sh * ch + 9.0


def _check_levels(need: float, tr: Truncation, what: str) -> None:
    if need > tr.n_max + tr.pad:
        raise TruncationTooSmall(
            f"{what} needs ~{need:.0f} levels but n_max + pad = {tr.n_max + tr.pad}"
        )


def displacement(alpha: complex, tr: Truncation, full: bool = False) -> np.ndarray:
    """D(alpha) = exp(alpha a^dag - alpha^* a).

    Returns the retained ``(n_max+1)``-square block, or the padded matrix
    when ``full`` is set.
    """
    _check_levels(displacement_levels(alpha), tr, "displacement")
    a, ad = ladder_ops(tr)
    u = matrix_exponential(alpha * ad - np.conj(alpha) * a)
    return u if full else u[: tr.dim, : tr.dim]


def squeeze(zeta: complex, tr: Truncation, full: bool = False) -> np.ndarray:
    """S(zeta) = exp(-zeta a^dag^2 / 2 + zeta^* a^2 / 2)."""
    _check_levels(squeeze_levels(abs(zeta)), tr, "squeeze")
    a, ad = ladder_ops(tr)
    u = matrix_exponential(-0.5 * zeta * (ad @ ad) + 0.5 * np.conj(zeta) * (a @ a))
    return u if full else u[: tr.dim, : tr.dim]


def unitarity_defect(u: np.ndarray) -> float:
    """max |U^dagger U - I|; for a column block, the isometry defect."""
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[1]))))
