import numpy as np
import pytest
from hypothesis import given

from conftest import random_valid_grid, valid_params
from coupledosc import (
    ModelParams,
    build_local,
    build_nonlocal,
    build_nonlocal_thermal,
    diagonalize,
    rates,
)
from coupledosc.errors import AsymmetricBath, AsymmetricDamping
from coupledosc.generators import (
    OP_A,
    OP_ADAG,
    OP_B,
    OP_BDAG,
    _dagger,
    assemble_generators,
    eigenmode_jumps,
    hamiltonian_terms,
)

_SWAP = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def test_local_entries():
    p = ModelParams(1.0, 0.05, 0.05, 0.01, 0.01)
    g = build_local(p)
    assert g.drift[0, 0] == 1j - 0.01
    assert g.drift[0, 2] == 0.05j
    assert g.drift[0, 3] == -0.05j
    assert g.drift[1, 1] == -1j - 0.01


def test_local_diffusion_vanishes_without_squeezing_or_thermal():
    g = build_local(ModelParams(1.0, 0.3, 0.0, 0.02, 0.05))
    assert np.all(g.diffusion == 0)


def test_local_diffusion_squeezing_entries():
    g = build_local(ModelParams(1.0, 0.0, 1 / 3, 0.01, 0.01))
    assert g.diffusion[0, 2] == pytest.approx(1j / 6, abs=1e-15)
    assert g.diffusion[1, 3] == pytest.approx(-1j / 6, abs=1e-15)


def test_local_thermal_entries():
    g = build_local(ModelParams(1.0, 0.0, 0.0, 0.01, 0.02, 0.5, 0.25))
    assert g.diffusion[0, 1] == -0.01 * 0.5
    assert g.diffusion[2, 3] == -0.02 * 0.25


@given(valid_params(symmetric=True))
def test_rwa_limit_equality(p):
    p0 = ModelParams(p.omega, p.kappa, 0.0, p.gamma_a, p.gamma_a)
    gl, gn = build_local(p0), build_nonlocal(p0)
    assert np.abs(gl.drift - gn.drift).max() + np.abs(gl.diffusion - gn.diffusion).max() < 1e-13


def test_nonlocal_diagonal_composes_rates():
    p = ModelParams(1.0, 0.0, 1 / 3, 0.01, 0.01)
    r = rates(diagonalize(p), 0.005, 0.0)
    g = build_nonlocal(p)
    assert g.drift[0, 0] == pytest.approx(1j - (r.gamma1 - r.gamma2), abs=1e-15)
    assert g.drift[0, 2] == pytest.approx(r.gamma5 - r.gamma4 + 1j * p.kappa, abs=1e-15)


def test_nonlocal_zero_damping_is_hamiltonian_only():
    p = ModelParams(1.0, 0.1, 0.2, 0.0, 0.0)
    g = build_nonlocal(p)
    expected_drift = build_local(ModelParams(1.0, 0.1, 0.2)).drift
    assert np.abs(g.drift - expected_drift).max() == 0.0
    mask = np.zeros((4, 4), bool)
    mask[0, 2] = mask[2, 0] = mask[1, 3] = mask[3, 1] = True
    assert np.all(g.diffusion[~mask] == 0)
    assert g.diffusion[0, 2] == 1j * 0.1


def test_nonlocal_rejects_asymmetric_damping():
    with pytest.raises(AsymmetricDamping):
        build_nonlocal(ModelParams(1.0, 0.0, 0.1, 0.01, 0.02))
    with pytest.raises(AsymmetricDamping):
        build_nonlocal_thermal(ModelParams(1.0, 0.0, 0.1, 0.01, 0.02, 0.1, 0.1))


def test_nonlocal_rejects_thermal_occupancy():
    with pytest.raises(ValueError):
        build_nonlocal(ModelParams(1.0, 0.0, 0.1, 0.01, 0.01, 0.1, 0.1))


def test_thermal_rejects_asymmetric_bath():
    with pytest.raises(AsymmetricBath):
        build_nonlocal_thermal(ModelParams(1.0, 0.0, 0.1, 0.01, 0.01, 0.1, 0.2))


@given(valid_params(symmetric=True, thermal=True))
def test_diffusion_symmetric_all_builders(p):
    gens = [build_local(p), build_nonlocal_thermal(p)]
    if p.nbar_a == 0:
        gens.append(build_nonlocal(p))
    for g in gens:
        assert np.abs(g.diffusion - g.diffusion.T).max() < 1e-14


@given(valid_params(symmetric=True, thermal=True))
def test_conjugation_pairing(p):
    # swapping (kappa_a <-> kappa_a*, eta_b <-> eta_b*) and conjugating must
    # reproduce the generators; this encodes chi* (z) = chi(-z) on the
    # physical slice
    for g in (build_local(p), build_nonlocal_thermal(p)):
        for mat in (g.drift, g.diffusion):
            assert np.abs(_SWAP @ np.conj(mat) @ _SWAP - mat).max() < 1e-13


def test_hurwitz_on_grid():
    for p in random_valid_grid(100, min_gamma=1e-3):
        for g in (build_local(p), build_nonlocal(p)):
            assert np.max(np.linalg.eigvals(g.drift).real) < 0


def test_compiler_reproduces_local_matrices():
    p = ModelParams(1.0, 0.05, 0.07, 0.01, 0.02, 0.3, 0.1)
    d_terms = [
        (p.gamma_a * (p.nbar_a + 1), OP_A.astype(complex), _dagger(OP_A)),
        (p.gamma_a * p.nbar_a, OP_ADAG.astype(complex), _dagger(OP_ADAG)),
        (p.gamma_b * (p.nbar_b + 1), OP_B.astype(complex), _dagger(OP_B)),
        (p.gamma_b * p.nbar_b, OP_BDAG.astype(complex), _dagger(OP_BDAG)),
    ]
    N, M = assemble_generators(hamiltonian_terms(p), d_terms)
    g = build_local(p)
    assert np.abs(N - g.drift).max() < 1e-14
    assert np.abs(M - g.diffusion).max() < 1e-14


@given(valid_params(symmetric=True))
def test_compiler_reproduces_nonlocal_matrices(p):
    r = rates(diagonalize(p), p.gamma_a / 2, 0.0)
    l_vec, m_vec = eigenmode_jumps(p)
    N, M = assemble_generators(
        hamiltonian_terms(p),
        [(r.ff_corr, l_vec, _dagger(l_vec)), (r.qq_corr, m_vec, _dagger(m_vec))],
    )
    g = build_nonlocal(p)
    assert np.abs(N - g.drift).max() < 1e-13
    assert np.abs(M - g.diffusion).max() < 1e-13


def test_compiler_accepts_hamiltonian_in_either_basis():
    # omega_l l'l + omega_m m'm differs from the bare-mode Hamiltonian only
    # by a constant, which drops out of the commutator
    p = ModelParams(1.0, 0.15, 0.25, 0.01, 0.01)
    d = diagonalize(p)
    l_vec, m_vec = eigenmode_jumps(p)
    h_normal = [
        (d.omega_l, _dagger(l_vec), l_vec),
        (d.omega_m, _dagger(m_vec), m_vec),
    ]
    N1, M1 = assemble_generators(h_normal, [])
    N2, M2 = assemble_generators(hamiltonian_terms(p), [])
    assert np.abs(N1 - N2).max() < 1e-13
    assert np.abs(M1 - M2).max() < 1e-13


@given(valid_params(symmetric=True, thermal=True))
def test_thermal_reduces_to_nonlocal_and_keeps_drift(p):
    p0 = ModelParams(p.omega, p.kappa, p.lambda_, p.gamma_a, p.gamma_a)
    g0 = build_nonlocal(p0)
    gt = build_nonlocal_thermal(p)
    # drift is independent of the bath occupancy (downward minus upward
    # rates cancel the nbar dependence)
    assert np.abs(gt.drift - g0.drift).max() < 1e-13
    if p.nbar_a == 0:
        assert np.abs(gt.diffusion - g0.diffusion).max() < 1e-13
