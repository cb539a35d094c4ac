"""Memoized state construction shared across test modules."""

from functools import lru_cache

from jclab import jc
from jclab.states import FieldSpec, Ordering, density_auto, pcd, pcd_oracle


def spec(n_c, n_s, n_th, ordering="SCTS"):
    return FieldSpec(n_c, n_s, n_th, ordering=Ordering(ordering))


@lru_cache(maxsize=None)
def density(s: FieldSpec):
    return density_auto(s)


@lru_cache(maxsize=None)
def oracle(s: FieldSpec):
    rho, tr = density(s)
    return pcd_oracle(s, tr)


@lru_cache(maxsize=None)
def closed(s: FieldSpec):
    return pcd(s)


@lru_cache(maxsize=None)
def negativity_series(s: FieldSpec):
    rho, _ = density(s)
    state = jc.initial_joint(rho)
    return jc.negativity(state, jc.JcParams(), jc.default_times(), method="lowrank")
