"""Drift and diffusion matrices of the characteristic-function equations.

For a Gaussian state the normal-ordered characteristic function
chi(z) = <exp(z0 a') exp(-z1 a) exp(z2 b') exp(-z3 b)> keeps the form
exp(-z^T L z + i z^T h) with z = (kappa_a, kappa_a*, eta_b, eta_b*).
A quadratic Lindblad master equation then closes into two matrix ODEs

    dL/dt = N L + L N^T - M,        dh/dt = N h,

with a drift matrix N and a symmetric diffusion matrix M.  This module
builds (N, M) for the local per-oscillator damping model, for the
eigenmode (nonlocal) damping model, and for the thermal extension of the
latter.

Dissipators are taken in the doubled form

    D[c] rho = 2 c rho c' - c'c rho - rho c'c,

so a rate g on D[a] damps amplitudes at g and occupations at 2g.  The
variable ordering z = (kappa_a, kappa_a*, eta_b, eta_b*) is frozen here
and used identically by every consumer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bogoliubov import diagonalize, rates
from .errors import AsymmetricBath, AsymmetricDamping
from .model import ModelParams, validate

__all__ = [
    "GeneratorMatrices",
    "build_local",
    "build_nonlocal",
    "build_nonlocal_thermal",
    "assemble_generators",
    "hamiltonian_terms",
    "eigenmode_jumps",
    "OP_A",
    "OP_ADAG",
    "OP_B",
    "OP_BDAG",
]


@dataclass(frozen=True)
class GeneratorMatrices:
    """Drift N, diffusion M, and the parameter snapshot that produced them."""

    drift: np.ndarray
    diffusion: np.ndarray
    model_tag: str
    params: ModelParams


# Coefficient vectors over the operator basis (a, a', b, b').
OP_A = np.array([1.0, 0.0, 0.0, 0.0])
OP_ADAG = np.array([0.0, 1.0, 0.0, 0.0])
OP_B = np.array([0.0, 0.0, 1.0, 0.0])
OP_BDAG = np.array([0.0, 0.0, 0.0, 1.0])

# Phase-space action of left/right multiplication by a basis operator on the
# normal-ordered characteristic function:  X E -> (aL_X . z + beta_X . grad) E
# and E X -> (aR_X . z + beta_X . grad) E.  Rows follow the operator basis.
_BETA = np.array(
    [
        [0.0, -1.0, 0.0, 0.0],  # a
        [1.0, 0.0, 0.0, 0.0],  # a'
        [0.0, 0.0, 0.0, -1.0],  # b
        [0.0, 0.0, 1.0, 0.0],  # b'
    ]
)
_ALPHA_L = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ]
)
_ALPHA_R = np.array(
    [
        [0.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
    ]
)


def _dagger(v: np.ndarray) -> np.ndarray:
    """Hermitian conjugate of a linear combination of (a, a', b, b')."""
    w = np.conj(np.asarray(v, dtype=complex))
    return w[[1, 0, 3, 2]]


def assemble_generators(
    h_terms: Sequence[tuple[complex, np.ndarray, np.ndarray]],
    d_terms: Sequence[tuple[float, np.ndarray, np.ndarray]],
) -> tuple[np.ndarray, np.ndarray]:
    """Compile a quadratic master equation into the (N, M) pair.

    h_terms lists Hamiltonian monomials (coeff, X, Y) meaning coeff * X Y,
    d_terms lists generalized dissipator terms (rate, X, Y) meaning
    rate * (2 X rho Y - Y X rho - rho Y X); X, Y are coefficient vectors
    over (a, a', b, b').  Standard dissipators take Y = X-dagger.
    """
    N = np.zeros((4, 4), dtype=complex)
    M = np.zeros((4, 4), dtype=complex)

    def maps(v: np.ndarray):
        v = np.asarray(v, dtype=complex)
        return v @ _ALPHA_L, v @ _ALPHA_R, v @ _BETA

    for coeff, x, y in h_terms:
        aLx, aRx, bx = maps(x)
        aLy, aRy, by = maps(y)
        N += -1j * coeff * (np.outer(aRx - aLx, by) + np.outer(aRy - aLy, bx))
        mm = np.outer(aRx, aRy) - np.outer(aLy, aLx)
        M += -1j * coeff * (mm + mm.T) / 2

    for rate, x, y in d_terms:
        aLx, aRx, bx = maps(x)
        aLy, aRy, by = maps(y)
        N += rate * (np.outer(aRx - aLx, by) + np.outer(aLy - aRy, bx))
        mm = 2 * np.outer(aRx, aLy) - np.outer(aRy, aRx) - np.outer(aLx, aLy)
        M += rate * (mm + mm.T) / 2

    return N, M


def hamiltonian_terms(params: ModelParams) -> list[tuple[complex, np.ndarray, np.ndarray]]:
    """Monomial list of the coupled-oscillator Hamiltonian."""
    w, k, lam = params.omega, params.kappa, params.lambda_
    return [
        (w, OP_ADAG, OP_A),
        (w, OP_BDAG, OP_B),
        (k, OP_ADAG, OP_B),
        (k, OP_BDAG, OP_A),
        (lam, OP_A, OP_B),
        (lam, OP_ADAG, OP_BDAG),
    ]


def eigenmode_jumps(params: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """Normal-mode lowering operators l, m as combinations of (a, a', b, b')."""
    d = diagonalize(params)
    s = 1.0 / np.sqrt(2.0)
    l_vec = s * np.array([d.alpha1, d.beta1, d.alpha1, d.beta1], dtype=complex)
    m_vec = s * np.array([d.alpha2, d.beta2, -d.alpha2, -d.beta2], dtype=complex)
    return l_vec, m_vec


def build_local(params: ModelParams) -> GeneratorMatrices:
    """Generator matrices for local per-oscillator Lindblad damping.

    The drift carries the Hamiltonian couplings plus a diagonal damping
    -gamma_s; the diffusion combines the squeezing coupling (+-i lambda/2)
    with the thermal injection -gamma_s nbar_s.
    """
    validate(params)
    w, k, lam = params.omega, params.kappa, params.lambda_
    ga, gb = params.gamma_a, params.gamma_b
    na, nb = params.nbar_a, params.nbar_b

    N = np.array(
        [
            [1j * w - ga, 0, 1j * k, -1j * lam],
            [0, -1j * w - ga, 1j * lam, -1j * k],
            [1j * k, -1j * lam, 1j * w - gb, 0],
            [1j * lam, -1j * k, 0, -1j * w - gb],
        ],
        dtype=complex,
    )
    M = np.array(
        [
            [0, -ga * na, 1j * lam / 2, 0],
            [-ga * na, 0, 0, -1j * lam / 2],
            [1j * lam / 2, 0, 0, -gb * nb],
            [0, -1j * lam / 2, -gb * nb, 0],
        ],
        dtype=complex,
    )
    return GeneratorMatrices(drift=N, diffusion=M, model_tag="local", params=params)


def build_nonlocal(params: ModelParams) -> GeneratorMatrices:
    """Generator matrices for zero-temperature eigenmode (nonlocal) damping.

    Requires symmetric bath coupling (gamma_a == gamma_b); the flat-bath
    rate feeding the normal modes is gamma_a/2, which makes the lambda=0
    limit coincide with the local model at the same gamma_a.
    """
    validate(params)
    if params.gamma_a != params.gamma_b:
        raise AsymmetricDamping(
            f"eigenmode damping requires gamma_a == gamma_b, "
            f"got {params.gamma_a} and {params.gamma_b}"
        )
    if params.nbar_a != 0 or params.nbar_b != 0:
        raise ValueError(
            "build_nonlocal is the zero-temperature model; "
            "use build_nonlocal_thermal for nbar > 0"
        )

    w, k, lam = params.omega, params.kappa, params.lambda_
    r = rates(diagonalize(params), params.gamma_a / 2.0, 0.0)
    g1, g2, g3 = r.gamma1, r.gamma2, r.gamma3
    g4, g5, g6 = r.gamma4, r.gamma5, r.gamma6

    d = g2 - g1  # diagonal damping
    c = g5 - g4  # cross-mode damping
    N = np.array(
        [
            [1j * w + d, 0, c + 1j * k, -1j * lam],
            [0, -1j * w + d, 1j * lam, -1j * k + c],
            [1j * k + c, -1j * lam, 1j * w + d, 0],
            [1j * lam, -1j * k + c, 0, -1j * w + d],
        ],
        dtype=complex,
    )
    M = np.array(
        [
            [-g3, -g2, 1j * lam / 2 - g6, -g5],
            [-g2, -g3, -g5, -1j * lam / 2 - g6],
            [1j * lam / 2 - g6, -g5, -g3, -g2],
            [-g5, -1j * lam / 2 - g6, -g2, -g3],
        ],
        dtype=complex,
    )
    return GeneratorMatrices(drift=N, diffusion=M, model_tag="nonlocal", params=params)


def build_nonlocal_thermal(params: ModelParams) -> GeneratorMatrices:
    """Eigenmode damping with thermal baths at a common flat occupancy.

    The normal-ordered correlations damp the l, m modes at rates scaled by
    nbar+1 and the anti-normal-ordered ones pump them at rates scaled by
    nbar, so each normal mode equilibrates to occupation nbar.  Reduces to
    :func:`build_nonlocal` entrywise at nbar = 0.
    """
    validate(params)
    if params.gamma_a != params.gamma_b:
        raise AsymmetricDamping(
            f"eigenmode damping requires gamma_a == gamma_b, "
            f"got {params.gamma_a} and {params.gamma_b}"
        )
    if params.nbar_a != params.nbar_b:
        raise AsymmetricBath(
            f"thermal eigenmode damping requires nbar_a == nbar_b, "
            f"got {params.nbar_a} and {params.nbar_b}"
        )
    if params.nbar_a == 0:
        gen = build_nonlocal(params)
        return GeneratorMatrices(gen.drift, gen.diffusion, "nonlocal", params)

    r = rates(diagonalize(params), params.gamma_a / 2.0, params.nbar_a)
    l_vec, m_vec = eigenmode_jumps(params)
    d_terms = [
        (r.ff_corr, l_vec, _dagger(l_vec)),
        (r.qq_corr, m_vec, _dagger(m_vec)),
        (r.ff_corr_th, _dagger(l_vec), l_vec),
        (r.qq_corr_th, _dagger(m_vec), m_vec),
    ]
    N, M = assemble_generators(hamiltonian_terms(params), d_terms)
    return GeneratorMatrices(drift=N, diffusion=M, model_tag="nonlocal", params=params)
