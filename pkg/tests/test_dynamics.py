import math

import numpy as np
import pytest
from scipy.linalg import expm

from coupledosc import (
    CharExponent,
    GeneratorMatrices,
    InitialState,
    ModeState,
    ModelParams,
    build_local,
    build_nonlocal,
    evolve,
    initial_exponent,
    moments,
    to_covariance,
)
from coupledosc import fock_oracle as fo
from coupledosc.dynamics import physicality_margin
from coupledosc.errors import StepSizeUnderflow

VACUUM = InitialState.vacuum()


def test_vacuum_exponent_is_zero():
    s = initial_exponent(VACUUM)
    assert np.all(s.ell == 0) and np.all(s.h == 0) and s.t == 0.0


def test_thermal_exponent_entries():
    s = initial_exponent(InitialState(ModeState(n0=0.7), ModeState()))
    assert s.ell[0, 1] + s.ell[1, 0] == pytest.approx(0.7, abs=1e-15)
    mask = np.ones((4, 4), bool)
    mask[0, 1] = mask[1, 0] = False
    assert np.all(s.ell[mask] == 0)
    m = moments(s)
    assert m.n_a == pytest.approx(0.7, abs=1e-15)
    assert m.aa == 0


def test_coherent_exponent_means():
    alpha = 0.4 - 0.9j
    s = initial_exponent(InitialState(ModeState(displacement=alpha), ModeState()))
    assert np.all(s.ell == 0)
    m = moments(s)
    assert m.a == pytest.approx(alpha, abs=1e-15)
    assert m.b == 0
    # raw second moments of a coherent state factorize
    assert m.aa == pytest.approx(alpha**2, abs=1e-15)
    assert m.n_a == pytest.approx(abs(alpha) ** 2, abs=1e-15)


@pytest.mark.parametrize(
    "state",
    [
        InitialState(ModeState(n0=0.3), ModeState()),
        InitialState(ModeState(displacement=0.6 + 0.3j), ModeState(n0=0.2)),
        InitialState(ModeState(r=0.4, theta=0.7), ModeState(displacement=-0.2 + 0.5j)),
        InitialState(ModeState(n0=0.1, r=0.3, theta=-1.1, displacement=0.2j), ModeState(r=0.2)),
    ],
)
def test_moment_map_against_fock_construction(state):
    """The frozen (ell, h) -> moments map agrees with direct operator averages."""
    cutoff = 30
    sys_ = fo.build_local_superop(ModelParams(omega=1.0), cutoff)
    mo = fo.expectations(sys_, fo.initial_density(state, cutoff))
    mg = moments(initial_exponent(state))
    for field in ("a", "b", "aa", "bb", "ab", "ab_dag", "n_a", "n_b"):
        assert getattr(mg, field) == pytest.approx(getattr(mo, field), abs=2e-9), field


def test_covariance_examples():
    v = to_covariance(initial_exponent(VACUUM))
    assert np.abs(v.V - np.eye(4) / 2).max() < 1e-15
    assert np.all(v.mean == 0)

    th = to_covariance(initial_exponent(InitialState(ModeState(n0=0.8), ModeState())))
    assert np.abs(th.V - np.diag([1.3, 1.3, 0.5, 0.5])).max() < 1e-14

    r = 0.6
    sq = to_covariance(initial_exponent(InitialState(ModeState(r=r), ModeState())))
    expected = np.diag([np.exp(-2 * r) / 2, np.exp(2 * r) / 2, 0.5, 0.5])
    assert np.abs(sq.V - expected).max() < 1e-14


def test_zero_generator_trajectory_constant():
    p = ModelParams(omega=1.0)
    gen = GeneratorMatrices(
        drift=np.zeros((4, 4), complex),
        diffusion=np.zeros((4, 4), complex),
        model_tag="local",
        params=p,
    )
    start = initial_exponent(InitialState(ModeState(n0=0.4, r=0.1), ModeState()))
    traj = evolve(start, gen, 5.0, 1.0)
    for s in traj:
        assert np.abs(s.ell - start.ell).max() == 0
        assert np.abs(s.h - start.h).max() == 0


def test_vacuum_is_fixed_point_without_squeezing():
    gen = build_local(ModelParams(1.0, 0.3, 0.0, 0.02, 0.01))
    traj = evolve(initial_exponent(VACUUM), gen, 10.0, 2.0)
    for s in traj:
        assert np.abs(s.ell).max() == 0.0
        assert np.abs(s.h).max() == 0.0


def test_time_grid_independence():
    p = ModelParams(1.0, 0.05, 0.2, 0.01, 0.01)
    gen = build_nonlocal(p)
    start = initial_exponent(VACUUM)
    coarse = evolve(start, gen, 2.0, 0.01)
    fine = evolve(start, gen, 2.0, 0.005)
    for i, s in enumerate(coarse):
        f = fine[2 * i]
        assert f.t == pytest.approx(s.t, abs=1e-12)
        ms, mf = moments(s), moments(f)
        for field in ("n_a", "n_b", "aa", "ab"):
            assert abs(getattr(ms, field) - getattr(mf, field)) < 1e-9


def test_mean_dynamics_matches_matrix_exponential():
    p = ModelParams(1.0, 0.12, 0.08, 0.02, 0.03)
    gen = build_local(p)
    init = InitialState(ModeState(displacement=0.7 - 0.2j), ModeState(displacement=0.1j))
    start = initial_exponent(init)
    traj = evolve(start, gen, 7.0, 7.0)
    expected_h = expm(gen.drift * 7.0) @ start.h
    # bound is the RK4 truncation error at the fixed step, not round-off
    assert np.abs(traj[-1].h - expected_h).max() < 1e-8
    # means follow through the moment map
    assert moments(traj[-1]).a == pytest.approx(-1j * expected_h[1], abs=1e-8)


def test_exponent_ode_residual():
    # central finite differences of the trajectory satisfy the matrix ODE
    p = ModelParams(1.0, 0.0, 0.25, 0.01, 0.01)
    gen = build_nonlocal(p)
    dt = 0.004
    traj = evolve(initial_exponent(VACUUM), gen, 40 * dt, dt)
    N, M = gen.drift, gen.diffusion
    for k in range(1, len(traj) - 1):
        dL = (traj[k + 1].ell - traj[k - 1].ell) / (2 * dt)
        rhs = N @ traj[k].ell + traj[k].ell @ N.T - M
        assert np.abs(dL - rhs).max() < 1e-5


def test_conjugation_pairing_along_trajectory():
    p = ModelParams(1.0, 0.1, 0.25, 0.01, 0.01)
    init = InitialState(ModeState(displacement=0.3 + 0.1j, r=0.2), ModeState(n0=0.1))
    swap = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    for gen in (build_local(p), build_nonlocal(p)):
        for s in evolve(initial_exponent(init), gen, 10.0, 1.0):
            assert np.abs(s.ell - s.ell.T).max() < 1e-12
            assert np.abs(swap @ np.conj(s.ell) @ swap - s.ell).max() < 1e-10
            assert abs(np.conj(s.h[0]) - s.h[1]) < 1e-10
            assert abs(np.conj(s.h[2]) - s.h[3]) < 1e-10


def test_rwa_limit_trajectories_coincide():
    p = ModelParams(1.0, 0.25, 0.0, 0.01, 0.01)
    tl = evolve(initial_exponent(VACUUM), build_local(p), 30.0, 1.0)
    tn = evolve(initial_exponent(VACUUM), build_nonlocal(p), 30.0, 1.0)
    for a, b in zip(tl, tn):
        assert np.abs(a.ell - b.ell).max() < 1e-9


def test_physicality_along_trajectories():
    for kap, lam in ((0.05, 0.05), (0.0, 1 / 3)):
        p = ModelParams(1.0, kap, lam, 0.01, 0.01)
        for gen in (build_local(p), build_nonlocal(p)):
            for s in evolve(initial_exponent(VACUUM), gen, 20.0, 0.5):
                assert physicality_margin(to_covariance(s).V) >= -1e-9


def test_nonlocal_matches_oracle_weak_coupling():
    p = ModelParams(1.0, 0.05, 0.05, 0.01, 0.01)
    gen = build_nonlocal(p)
    sys_ = fo.build_nonlocal_superop(p, 10)
    traj = evolve(initial_exponent(VACUUM), gen, 20.0, 1.0)
    otraj = fo.integrate(sys_, fo.initial_density(VACUUM, 10), 20.0, 1.0)
    for s, (t, dm) in zip(traj, otraj):
        assert s.t == pytest.approx(t, abs=1e-12)
        assert moments(s).n_a == pytest.approx(fo.expectations(sys_, dm).n_a, abs=1e-6)


def test_symmetric_configuration_keeps_modes_equal():
    p = ModelParams(1.0, 0.0, 1 / 3, 0.01, 0.01)
    for gen in (build_local(p), build_nonlocal(p)):
        for s in evolve(initial_exponent(VACUUM), gen, 15.0, 0.5):
            m = moments(s)
            assert m.n_a == pytest.approx(m.n_b, abs=1e-12)


def test_evolve_argument_validation():
    gen = build_local(ModelParams(1.0, 0.0, 0.0, 0.01, 0.01))
    start = initial_exponent(VACUUM)
    with pytest.raises(ValueError):
        evolve(start, gen, 0.0, 0.1)
    with pytest.raises(ValueError):
        evolve(start, gen, 1.0, -0.1)
    with pytest.raises(StepSizeUnderflow):
        evolve(start, gen, 1e9, 1e-6)
