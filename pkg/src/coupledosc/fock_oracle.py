"""Brute-force reference: both master equations in a truncated two-mode Fock space.

Integrating the density operator directly, with dissipators written as
explicit operator sums, pins every ordering and sign convention of the
Gaussian path.  This module is a test dependency, not a production path
(the CLI reaches it only through a hidden debug flag).

Dissipators use the same doubled convention as the generator matrices:
a pair (g, c) contributes g * (2 c rho c' - c'c rho - rho c'c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.sparse import csr_matrix

from .bogoliubov import diagonalize, rates
from .dynamics import Moments
from .errors import AsymmetricBath, AsymmetricDamping, CutoffTooSmall, StepSizeUnderflow
from .model import InitialState, ModelParams, ModeState, validate, validate_initial

__all__ = [
    "TruncatedSystem",
    "DensityMatrix",
    "build_local_superop",
    "build_nonlocal_superop",
    "integrate",
    "expectations",
    "check_density",
    "liouvillian_apply",
    "liouvillian_matrix",
    "bare_form_terms",
    "terms_liouvillian_matrix",
    "destroy",
    "thermal_density",
    "coherent_vector",
    "squeezed_vector",
    "product_density",
    "initial_density",
]

_MAX_STEPS = 20_000_000


@dataclass(frozen=True)
class TruncatedSystem:
    """Truncated two-mode system: operators, Hamiltonian, dissipator list."""

    cutoff: int
    a: np.ndarray
    a_dag: np.ndarray
    b: np.ndarray
    b_dag: np.ndarray
    hamiltonian: np.ndarray
    dissipators: tuple[tuple[float, np.ndarray], ...]
    params: ModelParams


@dataclass(frozen=True)
class DensityMatrix:
    rho: np.ndarray


def destroy(cutoff: int) -> np.ndarray:
    """Single-mode lowering operator on levels 0..cutoff-1."""
    return np.diag(np.sqrt(np.arange(1.0, cutoff)), k=1).astype(complex)


def _two_mode_ops(cutoff: int):
    a1 = destroy(cutoff)
    eye = np.eye(cutoff, dtype=complex)
    A = np.kron(a1, eye)
    B = np.kron(eye, a1)
    return A, B


def _hamiltonian(params: ModelParams, A, B) -> np.ndarray:
    Ad, Bd = A.conj().T, B.conj().T
    H = params.omega * (Ad @ A + Bd @ B)
    H += params.kappa * (Ad @ B + Bd @ A)
    H += params.lambda_ * (A @ B + Bd @ Ad)
    return H


def build_local_superop(params: ModelParams, cutoff: int) -> TruncatedSystem:
    """Local per-oscillator damping as explicit operator dissipators."""
    validate(params)
    if cutoff < 2:
        raise CutoffTooSmall(f"cutoff must be >= 2, got {cutoff}")
    A, B = _two_mode_ops(cutoff)
    diss = []
    for g, nbar, c in (
        (params.gamma_a, params.nbar_a, A),
        (params.gamma_b, params.nbar_b, B),
    ):
        if g * (nbar + 1) > 0:
            diss.append((g * (nbar + 1), c))
        if g * nbar > 0:
            diss.append((g * nbar, c.conj().T))
    return TruncatedSystem(
        cutoff=cutoff,
        a=A,
        a_dag=A.conj().T,
        b=B,
        b_dag=B.conj().T,
        hamiltonian=_hamiltonian(params, A, B),
        dissipators=tuple(diss),
        params=params,
    )


def eigenmode_operators(params: ModelParams, cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    """Normal-mode lowering operators l, m on the truncated space."""
    A, B = _two_mode_ops(cutoff)
    d = diagonalize(params)
    s = 1.0 / math.sqrt(2.0)
    l_op = s * (d.alpha1 * (A + B) + d.beta1 * (A.conj().T + B.conj().T))
    m_op = s * (d.alpha2 * (A - B) + d.beta2 * (A.conj().T - B.conj().T))
    return l_op, m_op


def build_nonlocal_superop(params: ModelParams, cutoff: int) -> TruncatedSystem:
    """Eigenmode damping (thermal included) as explicit operator dissipators."""
    validate(params)
    if cutoff < 2:
        raise CutoffTooSmall(f"cutoff must be >= 2, got {cutoff}")
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
    A, B = _two_mode_ops(cutoff)
    l_op, m_op = eigenmode_operators(params, cutoff)
    r = rates(diagonalize(params), params.gamma_a / 2.0, params.nbar_a)
    diss = []
    for g, c in (
        (r.ff_corr, l_op),
        (r.qq_corr, m_op),
        (r.ff_corr_th, l_op.conj().T),
        (r.qq_corr_th, m_op.conj().T),
    ):
        if g > 0:
            diss.append((g, c))
    return TruncatedSystem(
        cutoff=cutoff,
        a=A,
        a_dag=A.conj().T,
        b=B,
        b_dag=B.conj().T,
        hamiltonian=_hamiltonian(params, A, B),
        dissipators=tuple(diss),
        params=params,
    )


def liouvillian_apply(system: TruncatedSystem, rho: np.ndarray) -> np.ndarray:
    """Right-hand side of the master equation for a given density matrix."""
    H = system.hamiltonian
    out = -1j * (H @ rho - rho @ H)
    for g, c in system.dissipators:
        cd = c.conj().T
        cdc = cd @ c
        out += g * (2.0 * (c @ rho @ cd) - cdc @ rho - rho @ cdc)
    return out


def liouvillian_matrix(system: TruncatedSystem) -> np.ndarray:
    """Dense superoperator matrix (for small cutoffs only)."""
    d = system.cutoff**2
    cols = []
    for idx in range(d * d):
        basis = np.zeros((d, d), dtype=complex)
        basis[idx // d, idx % d] = 1.0
        cols.append(liouvillian_apply(system, basis).reshape(-1))
    return np.array(cols).T


def bare_form_terms(
    params: ModelParams, cutoff: int
) -> list[tuple[float, np.ndarray, np.ndarray]]:
    """Zero-temperature eigenmode damping rewritten over the bare modes.

    Each entry (g, X, Y) stands for g * (2 X rho Y - Y X rho - rho Y X).
    As matrix algebra this list is identical to the eigenmode dissipators,
    which is asserted by the test suite.
    """
    validate(params)
    if params.gamma_a != params.gamma_b:
        raise AsymmetricDamping("bare-mode form requires gamma_a == gamma_b")
    A, B = _two_mode_ops(cutoff)
    Ad, Bd = A.conj().T, B.conj().T
    r = rates(diagonalize(params), params.gamma_a / 2.0, 0.0)
    g1, g2, g3, g4, g5, g6 = r.gamma1, r.gamma2, r.gamma3, r.gamma4, r.gamma5, r.gamma6
    return [
        (g1, A, Ad),
        (g1, B, Bd),
        (g2, Ad, A),
        (g2, Bd, B),
        (g3, A, A),
        (g3, Ad, Ad),
        (g3, B, B),
        (g3, Bd, Bd),
        (g4, A, Bd),
        (g4, B, Ad),
        (g5, Bd, A),
        (g5, Ad, B),
        (g6, B, A),
        (g6, A, B),
        (g6, Bd, Ad),
        (g6, Ad, Bd),
    ]


def terms_liouvillian_matrix(
    hamiltonian: np.ndarray, terms: list[tuple[float, np.ndarray, np.ndarray]]
) -> np.ndarray:
    """Superoperator matrix of -i[H, .] plus generalized dissipator terms."""
    d = hamiltonian.shape[0]

    def apply(rho):
        out = -1j * (hamiltonian @ rho - rho @ hamiltonian)
        for g, x, y in terms:
            yx = y @ x
            out += g * (2.0 * (x @ rho @ y) - yx @ rho - rho @ yx)
        return out

    cols = []
    for idx in range(d * d):
        basis = np.zeros((d, d), dtype=complex)
        basis[idx // d, idx % d] = 1.0
        cols.append(apply(basis).reshape(-1))
    return np.array(cols).T


def check_density(dm: DensityMatrix, *, trace_tol=1e-9, herm_tol=1e-10, pos_tol=1e-8) -> None:
    rho = dm.rho
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ArithmeticError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
    if np.max(np.abs(rho - rho.conj().T)) > herm_tol:
        raise ArithmeticError("density matrix lost Hermiticity")
    if np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min() < -pos_tol:
        raise ArithmeticError("density matrix lost positivity")


def integrate(
    system: TruncatedSystem,
    rho0: DensityMatrix,
    t_end: float,
    dt_out: float,
) -> list[tuple[float, DensityMatrix]]:
    """Fixed-step RK4 integration of the master equation.

    Uses the same step policy as the Gaussian path so the two share a time
    discretization.  Trace/Hermiticity/positivity are checked at every
    output sample.
    """
    if t_end <= 0 or dt_out <= 0:
        raise ValueError("t_end and dt_out must be > 0")
    d = diagonalize(system.params)
    cap = min(1.0 / system.params.omega, 1.0 / d.omega_l, 1.0 / d.omega_m) / 50.0
    n_out = int(math.floor(t_end / dt_out + 1e-9))
    n_sub = max(1, math.ceil(dt_out / cap - 1e-12))
    if n_out * n_sub > _MAX_STEPS:
        raise StepSizeUnderflow(f"{n_out * n_sub} oracle steps requested; refusing")
    dt = dt_out / n_sub

    # The mode operators are banded, so the Liouvillian action is applied
    # through sparse representations; results match the dense definition in
    # liouvillian_apply to round-off.
    A_eff = -1j * system.hamiltonian
    jumps = []
    for g, c in system.dissipators:
        cd = c.conj().T
        A_eff -= g * (cd @ c)
        jumps.append((2.0 * g, csr_matrix(c), csr_matrix(cd.T)))
    A_sp = csr_matrix(A_eff)
    Adag_T_sp = csr_matrix(A_eff.conj())

    def rhs(r):
        out_ = A_sp @ r
        out_ += (Adag_T_sp @ r.T).T
        for g2, c_sp, cd_T_sp in jumps:
            out_ += g2 * (cd_T_sp @ (c_sp @ r).T).T
        return out_

    rho = rho0.rho.astype(complex).copy()
    out = [(0.0, DensityMatrix(rho.copy()))]
    check_density(out[0][1])
    for k in range(n_out):
        for _ in range(n_sub):
            k1 = rhs(rho)
            k2 = rhs(rho + 0.5 * dt * k1)
            k3 = rhs(rho + 0.5 * dt * k2)
            k4 = rhs(rho + dt * k3)
            rho = rho + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
            rho = 0.5 * (rho + rho.conj().T)
        sample = DensityMatrix(rho.copy())
        check_density(sample)
        out.append(((k + 1) * dt_out, sample))
    return out


def expectations(system: TruncatedSystem, dm: DensityMatrix) -> Moments:
    """First and second moments of a density matrix, as the Gaussian path reports them."""
    rho = dm.rho
    A, B = system.a, system.b
    Ad, Bd = system.a_dag, system.b_dag

    def ev(op):
        return complex(np.trace(op @ rho))

    return Moments(
        a=ev(A),
        b=ev(B),
        aa=ev(A @ A),
        bb=ev(B @ B),
        ab=ev(A @ B),
        ab_dag=ev(A @ Bd),
        n_a=float(ev(Ad @ A).real),
        n_b=float(ev(Bd @ B).real),
    )


# --- state preparation -----------------------------------------------------


def thermal_density(cutoff: int, n0: float) -> np.ndarray:
    """Single-mode thermal state, renormalized on the truncated space."""
    if n0 == 0:
        rho = np.zeros((cutoff, cutoff), dtype=complex)
        rho[0, 0] = 1.0
        return rho
    weights = (n0 / (n0 + 1.0)) ** np.arange(cutoff) / (n0 + 1.0)
    weights = weights / weights.sum()
    return np.diag(weights).astype(complex)


def coherent_vector(cutoff: int, alpha: complex) -> np.ndarray:
    n = np.arange(cutoff)
    log_fact = np.cumsum(np.log(np.maximum(n, 1)))
    amps = np.exp(-0.5 * abs(alpha) ** 2 + n * np.log(alpha) - 0.5 * log_fact) if alpha != 0 else None
    if alpha == 0:
        vec = np.zeros(cutoff, dtype=complex)
        vec[0] = 1.0
        return vec
    vec = amps.astype(complex)
    return vec / np.linalg.norm(vec)


def squeezed_vector(cutoff: int, r: float, theta: float) -> np.ndarray:
    """Squeezed vacuum with the convention S a S' = a cosh r + a' e^{i theta} sinh r."""
    vec = np.zeros(cutoff, dtype=complex)
    vec[0] = 1.0
    if r == 0:
        return vec
    a = destroy(cutoff)
    xi = r * np.exp(1j * theta)
    gen = 0.5 * (np.conj(xi) * (a @ a) - xi * (a.conj().T @ a.conj().T))
    vec = expm(gen) @ vec
    return vec / np.linalg.norm(vec)


def product_density(rho_a: np.ndarray, rho_b: np.ndarray) -> DensityMatrix:
    return DensityMatrix(np.kron(rho_a, rho_b))


def _mode_density(mode: ModeState, cutoff: int) -> np.ndarray:
    rho = thermal_density(cutoff, mode.n0)
    a = destroy(cutoff)
    ad = a.conj().T
    if mode.r != 0:
        xi = mode.r * np.exp(1j * mode.theta)
        S = expm(0.5 * (np.conj(xi) * (a @ a) - xi * (ad @ ad)))
        rho = S @ rho @ S.conj().T
    if mode.displacement != 0:
        al = mode.displacement
        D = expm(al * ad - np.conj(al) * a)
        rho = D @ rho @ D.conj().T
    return rho / np.trace(rho)


def initial_density(init: InitialState, cutoff: int) -> DensityMatrix:
    """Product density matrix of a displaced squeezed thermal initial state."""
    validate_initial(init)
    return product_density(
        _mode_density(init.mode_a, cutoff), _mode_density(init.mode_b, cutoff)
    )
