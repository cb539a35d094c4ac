"""Squeezed coherent thermal states, photon counting distributions and
resonant Jaynes-Cummings dynamics."""

from .fock import Truncation, displacement, squeeze
from .jc import JcParams, JointState, TimeSeries, initial_joint, inversion_diagonal, inversion_full, negativity
from .states import FieldSpec, Ordering, Pcd, build_density, pcd, pcd_closed_form, pcd_oracle
from .stats import g2_sweep, g2_zero, moments, peak_and_width

__all__ = [
    "FieldSpec", "JcParams", "JointState", "Ordering", "Pcd", "TimeSeries", "Truncation",
    "build_density", "displacement", "g2_sweep", "g2_zero", "initial_joint",
    "inversion_diagonal", "inversion_full", "moments", "negativity", "pcd",
    "pcd_closed_form", "pcd_oracle", "peak_and_width", "squeeze",
]
