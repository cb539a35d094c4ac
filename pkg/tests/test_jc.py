import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from jclab import jc
from jclab.errors import InvalidDensity
from jclab.fock import unitarity_defect
from jclab.jc import JcParams, JointState, TimeSeries
from jclab.states import Pcd

from cache import closed, density, oracle, spec
from oracles import poisson_pmf

P = JcParams()


def vacuum(d=4):
    rho = np.zeros((d, d), dtype=complex)
    rho[0, 0] = 1
    return rho


def random_density(rng, d, rank=None):
    rank = rank or d
    x = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = x @ x.conj().T
    return rho / np.trace(rho).real


def test_params():
    assert P.detuning == 0
    with pytest.raises(ValueError):
        JcParams(lam=0)
    with pytest.raises(ValueError):
        JcParams(omega=1.0, omega0=1.1)


def test_timeseries_validation():
    with pytest.raises(ValueError):
        TimeSeries([0, 1], [1.0])
    with pytest.raises(ValueError):
        TimeSeries([0, 1, 1], [1.0, 2.0, 3.0])
    assert jc.default_times().size == 2001


def test_initial_joint_vacuum():
    st = jc.initial_joint(vacuum())
    assert st.matrix.shape == (8, 8)
    assert st.matrix[0, 0] == 1
    assert np.count_nonzero(st.matrix) == 1
    assert st.n_max == 3


def test_initial_joint_rejects():
    with pytest.raises(InvalidDensity):
        jc.initial_joint(np.diag([0.5, 0.4]))
    with pytest.raises(InvalidDensity):
        jc.initial_joint(np.diag([1.5, -0.5]))
    with pytest.raises(InvalidDensity):
        jc.initial_joint(np.array([[0.5, 0.5], [0.0, 0.5]]))


def test_initial_joint_product():
    rho = random_density(np.random.default_rng(1), 6)
    st = jc.initial_joint(rho)
    assert np.trace(st.matrix).real == pytest.approx(1.0)
    assert jc.negativity_of(st) < 1e-12


def test_evolve_zero_is_identity():
    st = jc.initial_joint(random_density(np.random.default_rng(2), 5))
    assert_allclose(jc.evolve(st, P, 0.0).matrix, st.matrix, atol=1e-15)


def test_vacuum_rabi_flop():
    st = jc.evolve(jc.initial_joint(vacuum()), P, math.pi / 2)
    d = st.field_dim
    assert st.matrix[d + 1, d + 1].real == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("n_max", [1, 5, 30])
def test_propagator_unitary(n_max):
    for lam_t in (0.3, 2.0, 17.5):
        assert unitarity_defect(jc.propagator(n_max, lam_t)) < 1e-12


def test_evolve_matches_dense_propagator():
    rng = np.random.default_rng(3)
    m = random_density(rng, 14)
    st = JointState(m)
    u = jc.propagator(st.n_max, 1.7)
    assert_allclose(jc.evolve(st, JcParams(lam=0.85), 2.0).matrix, u @ m @ u.conj().T, atol=1e-14)


@settings(max_examples=30, deadline=None)
@given(d=st.integers(2, 24), rank=st.integers(1, 6), t=st.floats(0, 60), seed=st.integers(0, 2**32 - 1))
def test_trace_and_purity_conserved(d, rank, t, seed):
    rng = np.random.default_rng(seed)
    st0 = JointState(random_density(rng, 2 * d, min(rank, 2 * d)))
    st1 = jc.evolve(st0, P, t)
    assert abs(np.trace(st1.matrix) - 1) < 1e-9
    assert abs(jc.purity(st1) - jc.purity(st0)) < 1e-9


def test_inversion_diagonal_vacuum():
    times = jc.default_times(10, 101)
    w = jc.inversion_diagonal(Pcd.from_probs([1.0, 0.0]), P, times)
    assert_allclose(w.values, np.cos(2 * times), atol=1e-14)


def test_inversion_diagonal_deficit():
    p = Pcd.from_probs(poisson_pmf(25, 60))
    w = jc.inversion_diagonal(p, P, [0.0])
    assert w.values[0] == pytest.approx(1 - p.deficit, abs=1e-15)


def test_first_revival_time():
    # neighbouring Rabi frequencies 2 sqrt(n+1) differ by ~1/sqrt(nbar): revival at 2 pi sqrt(nbar)
    times = np.linspace(0, 50, 8001)
    w = jc.inversion_diagonal(Pcd.from_probs(poisson_pmf(25, 80)), P, times)
    env = jc.envelope(w)
    sel = times >= 8
    t_peak = times[sel][np.argmax(env[sel])]
    assert abs(t_peak - 2 * math.pi * 5) < 2.0


def test_early_window_is_collapse():
    w = jc.inversion_diagonal(Pcd.from_probs(poisson_pmf(25, 80)), P, jc.default_times())
    assert jc.window_max(w, 10, 22) < 0.01


def test_thermal_photons_lower_revival():
    times = jc.default_times()
    coherent = jc.inversion_diagonal(closed(spec(25, 0, 0)), P, times)
    mixed = jc.inversion_diagonal(closed(spec(25, 0, 1)), P, times)
    assert jc.window_max(mixed, 24, 40) < jc.window_max(coherent, 24, 40)
    # the second collapse of the coherent case is gone
    assert len(jc.collapse_intervals(coherent)) == 2
    assert len(jc.collapse_intervals(mixed)) == 1


def test_inversion_full_vacuum():
    times = jc.default_times(10, 101)
    w = jc.inversion_full(jc.initial_joint(vacuum()), P, times)
    assert_allclose(w.values, np.cos(2 * times), atol=1e-14)


@pytest.mark.parametrize("triple", [(25, 1, 1), (0, 0, 1)])
def test_inversion_routes_agree(triple):
    s = spec(*triple)
    rho, _ = density(s)
    times = jc.default_times(50, 201)
    full = jc.inversion_full(jc.initial_joint(rho), P, times).values
    diag = jc.inversion_diagonal(closed(s), P, times).values
    assert np.max(np.abs(full - diag)) < 1e-8


def test_partial_transpose_involution():
    m = random_density(np.random.default_rng(4), 10)
    for side in ("atom", "field"):
        assert_allclose(jc.partial_transpose(jc.partial_transpose(m, side), side), m)
    with pytest.raises(ValueError):
        jc.partial_transpose(m, "both")


def test_partial_transpose_atom_indices():
    m = np.arange(36, dtype=complex).reshape(6, 6)
    pt = jc.partial_transpose(m, "atom")
    d = 3
    # rho^PT_{(a,n),(b,m)} = rho_{(b,n),(a,m)}
    for a in range(2):
        for b in range(2):
            for n in range(d):
                for k in range(d):
                    assert pt[a * d + n, b * d + k] == m[b * d + n, a * d + k]


@settings(max_examples=25, deadline=None)
@given(d=st.integers(2, 12), rank=st.integers(1, 4), seed=st.integers(0, 2**32 - 1))
def test_transpose_side_symmetry(d, rank, seed):
    st0 = JointState(random_density(np.random.default_rng(seed), 2 * d, rank))
    assert abs(jc.negativity_of(st0, "atom") - jc.negativity_of(st0, "field")) < 1e-10


def test_vacuum_bell_negativity():
    st0 = jc.initial_joint(vacuum())
    n = jc.negativity(st0, P, [0.0, math.pi / 4])
    assert n.values[0] < 1e-12
    assert n.values[1] == pytest.approx(0.5, abs=1e-12)


@settings(max_examples=20, deadline=None)
@given(d=st.integers(2, 16), rank=st.integers(1, 5), seed=st.integers(0, 2**32 - 1))
def test_lowrank_matches_direct(d, rank, seed):
    rng = np.random.default_rng(seed)
    st0 = jc.initial_joint(random_density(rng, d, min(rank, d)))
    times = rng.uniform(0, 50, size=4)
    times.sort()
    a = jc.negativity(st0, P, times).values
    b = jc.negativity(st0, P, times, method="lowrank").values
    assert np.max(np.abs(a - b)) < 1e-10
    assert np.all(a >= -1e-12) and np.all(a <= 0.5 + 1e-9)


@settings(max_examples=15, deadline=None)
@given(d=st.integers(2, 16), rank=st.integers(1, 5), seed=st.integers(0, 2**32 - 1))
def test_lowrank_real_field(d, rank, seed):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(d, min(rank, d)))
    rho = x @ x.T
    st0 = jc.initial_joint(rho / np.trace(rho))
    times = np.sort(rng.uniform(0, 50, size=4))
    a = jc.negativity(st0, P, times).values
    b = jc.negativity(st0, P, times, method="lowrank").values
    assert np.max(np.abs(a - b)) < 1e-10


def test_lowrank_matches_direct_scts():
    rho, _ = density(spec(9, 0.5, 0.5))
    st0 = jc.initial_joint(rho)
    times = jc.default_times(20, 21)
    a = jc.negativity(st0, P, times).values
    b = jc.negativity(st0, P, times, method="lowrank").values
    assert np.max(np.abs(a - b)) < 1e-8


def test_negativity_method_name():
    with pytest.raises(ValueError):
        jc.negativity(jc.initial_joint(vacuum()), P, [0.0], method="fast")


def test_collapse_detected_for_coherent():
    w = jc.inversion_diagonal(oracle(spec(25, 0, 0)), P, jc.default_times())
    spans = jc.collapse_intervals(w)
    assert spans
    a, b = spans[0]
    assert 2 < a < 5 and 20 < b < 27


def test_window_helpers():
    ts = TimeSeries([0, 1, 2, 3], [0.0, -2.0, 1.0, 0.0])
    assert jc.window_max(ts, 0.5, 3) == 2.0
    assert jc.time_average(ts) == pytest.approx((-1 - 0.5 + 0.5) / 3)
    assert_allclose(jc.envelope(ts, width=2.0), [2, 2, 2, 1])
