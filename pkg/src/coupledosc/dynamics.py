"""Time evolution of the characteristic-function exponent and moment extraction.

The integration state is the exponent (L, h) of the normal-ordered
characteristic function, not the covariance matrix; conversion to quadrature
covariance happens only at output.  The moment map below is the
second-order expansion of the Gaussian ansatz, frozen once:

    <a'>   = i h0            <a>    = -i h1        (same for b with h2, h3)
    <a'a>  = 2 L01 + h0 h1   <a^2>  = -2 L11 - h1^2
    <ab>   = -2 L13 - h1 h3  <ab'>  = 2 L12 + h1 h2   <a'b> = 2 L03 + h0 h3

with z = (kappa_a, kappa_a*, eta_b, eta_b*) indexed 0..3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PhysicalityLoss, StepSizeUnderflow
from .generators import GeneratorMatrices
from .model import InitialState, validate_initial

__all__ = [
    "CharExponent",
    "CovarianceState",
    "Moments",
    "initial_exponent",
    "evolve",
    "moments",
    "moments_to_covariance",
    "to_covariance",
    "symplectic_form",
    "physicality_margin",
]

# Quadrature map rows (q_a, p_a, q_b, p_b) over operators (a, a', b, b'),
# with q = (a + a')/sqrt2 and p = -i (a - a')/sqrt2, so vacuum has V = I/2.
_SQRT2 = math.sqrt(2.0)
_QUAD = np.array(
    [
        [1, 1, 0, 0],
        [-1j, 1j, 0, 0],
        [0, 0, 1, 1],
        [0, 0, -1j, 1j],
    ],
    dtype=complex,
) / _SQRT2

_PHYSICALITY_TOL = 1e-9
_MAX_STEPS = 200_000_000


@dataclass(frozen=True)
class CharExponent:
    """Gaussian state as the exponent of the characteristic function.

    ell is the symmetric 4x4 complex matrix L(t), h the 4-vector h(t),
    t the time the exponent refers to.
    """

    ell: np.ndarray
    h: np.ndarray
    t: float

    @staticmethod
    def zero(t: float = 0.0) -> "CharExponent":
        return CharExponent(np.zeros((4, 4), complex), np.zeros(4, complex), t)


@dataclass(frozen=True)
class CovarianceState:
    """Real quadrature covariance V and mean vector over (q_a, p_a, q_b, p_b)."""

    mean: np.ndarray
    V: np.ndarray


@dataclass(frozen=True)
class Moments:
    """First and second operator moments (raw, not centered)."""

    a: complex
    b: complex
    aa: complex
    bb: complex
    ab: complex
    ab_dag: complex  # <a b'>
    n_a: float
    n_b: float


def symplectic_form() -> np.ndarray:
    """Two-mode symplectic form for the (q_a, p_a, q_b, p_b) ordering."""
    j = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.block([[j, np.zeros((2, 2))], [np.zeros((2, 2)), j]])


def physicality_margin(V: np.ndarray) -> float:
    """Smallest eigenvalue of V + (i/2) Omega; nonnegative for physical states."""
    herm = V + 0.5j * symplectic_form()
    return float(np.linalg.eigvalsh(herm).min())


def initial_exponent(init: InitialState) -> CharExponent:
    """Exponent of a product of displaced squeezed thermal modes at t = 0."""
    validate_initial(init)
    ell = np.zeros((4, 4), dtype=complex)
    h = np.zeros(4, dtype=complex)
    for offset, mode in ((0, init.mode_a), (2, init.mode_b)):
        # Centered moments of a displaced squeezed thermal state, with the
        # squeeze convention S a S' = a cosh r + a' e^{i theta} sinh r.
        n_c = mode.n0 + (2 * mode.n0 + 1) * math.sinh(mode.r) ** 2
        m_c = -(2 * mode.n0 + 1) * math.sinh(mode.r) * math.cosh(mode.r) * np.exp(1j * mode.theta)
        ell[offset, offset + 1] = ell[offset + 1, offset] = n_c / 2
        ell[offset + 1, offset + 1] = -m_c / 2
        ell[offset, offset] = -np.conj(m_c) / 2
        h[offset] = -1j * np.conj(mode.displacement)
        h[offset + 1] = 1j * mode.displacement
    return CharExponent(ell=ell, h=h, t=0.0)


def _step_cap(gen: GeneratorMatrices) -> float:
    """Fixed step bound: 1/50 of the fastest oscillation time scale."""
    from .bogoliubov import diagonalize  # local import avoids a cycle at import time

    d = diagonalize(gen.params)
    fastest = min(1.0 / gen.params.omega, 1.0 / d.omega_l, 1.0 / d.omega_m)
    return fastest / 50.0


def _rk4_step(N, NT, M, L, h, dt):
    def fL(Lc):
        return N @ Lc + Lc @ NT - M

    k1 = fL(L)
    k2 = fL(L + 0.5 * dt * k1)
    k3 = fL(L + 0.5 * dt * k2)
    k4 = fL(L + dt * k3)
    L_next = L + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    L_next = 0.5 * (L_next + L_next.T)  # round-off drift breaks symmetry otherwise

    j1 = N @ h
    j2 = N @ (h + 0.5 * dt * j1)
    j3 = N @ (h + 0.5 * dt * j2)
    j4 = N @ (h + dt * j3)
    h_next = h + (dt / 6.0) * (j1 + 2 * j2 + 2 * j3 + j4)
    return L_next, h_next


def evolve(
    state: CharExponent,
    gen: GeneratorMatrices,
    t_end: float,
    dt_out: float,
) -> list[CharExponent]:
    """Integrate the exponent ODEs with fixed-step RK4.

    Returns samples at state.t + k*dt_out for k = 0..floor((t_end-state.t)/dt_out),
    the first being the input state.  Inside each output interval the step is
    dt_out/n with the smallest n that respects the step cap, so the result is
    deterministic for fixed inputs.  Every output sample is checked against
    the covariance physicality bound.
    """
    if t_end <= state.t:
        raise ValueError(f"t_end must exceed state.t, got {t_end} <= {state.t}")
    if dt_out <= 0:
        raise ValueError(f"dt_out must be > 0, got {dt_out}")

    n_out = int(math.floor((t_end - state.t) / dt_out + 1e-9))
    if n_out < 1:
        raise ValueError("no output samples in (state.t, t_end]")
    cap = _step_cap(gen)
    n_sub = max(1, math.ceil(dt_out / cap - 1e-12))
    dt = dt_out / n_sub
    if n_out * n_sub > _MAX_STEPS or dt < 1e-14:
        raise StepSizeUnderflow(
            f"{n_out * n_sub} steps of size {dt} requested; refusing"
        )

    N = gen.drift
    NT = N.T.copy()
    M = gen.diffusion

    # The RK4 step is affine in (L, h), so compile it once into a 16x16
    # matrix plus constant (and a 4x4 matrix for h) and iterate matvecs;
    # this is the same fixed-step scheme, evaluated through its linear
    # action.
    zero_L = np.zeros((4, 4), dtype=complex)
    zero_h = np.zeros(4, dtype=complex)
    const_L, _ = _rk4_step(N, NT, M, zero_L, zero_h, dt)
    c_L = const_L.reshape(16)
    T_L = np.empty((16, 16), dtype=complex)
    for idx in range(16):
        basis = zero_L.copy()
        basis.flat[idx] = 1.0
        col, _ = _rk4_step(N, NT, M, basis, zero_h, dt)
        T_L[:, idx] = col.reshape(16) - c_L
    T_h = np.empty((4, 4), dtype=complex)
    for idx in range(4):
        unit = zero_h.copy()
        unit[idx] = 1.0
        _, col_h = _rk4_step(N, NT, M, zero_L, unit, dt)
        T_h[:, idx] = col_h

    vec_L = state.ell.astype(complex).reshape(16).copy()
    h = state.h.astype(complex).copy()

    out = [state]
    for k in range(n_out):
        for _ in range(n_sub):
            vec_L = T_L @ vec_L + c_L
            h = T_h @ h
        sample = CharExponent(
            ell=vec_L.reshape(4, 4).copy(), h=h.copy(), t=state.t + (k + 1) * dt_out
        )
        to_covariance(sample)  # raises PhysicalityLoss on violation
        out.append(sample)
    return out


def moments(state: CharExponent) -> Moments:
    """Operator moments from the exponent (derivatives of the ansatz at z=0)."""
    L, h = state.ell, state.h
    return Moments(
        a=complex(-1j * h[1]),
        b=complex(-1j * h[3]),
        aa=complex(-2 * L[1, 1] - h[1] * h[1]),
        bb=complex(-2 * L[3, 3] - h[3] * h[3]),
        ab=complex(-2 * L[1, 3] - h[1] * h[3]),
        ab_dag=complex(2 * L[1, 2] + h[1] * h[2]),
        n_a=float((2 * L[0, 1] + h[0] * h[1]).real),
        n_b=float((2 * L[2, 3] + h[2] * h[3]).real),
    )


def moments_to_covariance(m: Moments) -> CovarianceState:
    """Quadrature covariance and mean from operator moments.

    The same conversion serves the Gaussian path and the Fock-space
    reference, so ordering conventions cannot diverge between them.
    """
    aa_c = m.aa - m.a * m.a
    bb_c = m.bb - m.b * m.b
    ab_c = m.ab - m.a * m.b
    abdag_c = m.ab_dag - m.a * np.conj(m.b)
    na_c = m.n_a - abs(m.a) ** 2
    nb_c = m.n_b - abs(m.b) ** 2

    C = np.empty((4, 4), dtype=complex)
    C[0, 0] = aa_c
    C[0, 1] = C[1, 0] = na_c + 0.5
    C[1, 1] = np.conj(aa_c)
    C[2, 2] = bb_c
    C[2, 3] = C[3, 2] = nb_c + 0.5
    C[3, 3] = np.conj(bb_c)
    C[0, 2] = C[2, 0] = ab_c
    C[0, 3] = C[3, 0] = abdag_c
    C[1, 2] = C[2, 1] = np.conj(abdag_c)
    C[1, 3] = C[3, 1] = np.conj(ab_c)

    V = _QUAD @ C @ _QUAD.T
    mean = _QUAD @ np.array([m.a, np.conj(m.a), m.b, np.conj(m.b)])
    V_re = V.real
    V_re = 0.5 * (V_re + V_re.T)

    margin = physicality_margin(V_re)
    if margin < -_PHYSICALITY_TOL:
        raise PhysicalityLoss(
            f"covariance violates the uncertainty bound by {-margin:.3e}"
        )
    return CovarianceState(mean=mean.real, V=V_re)


def to_covariance(state: CharExponent) -> CovarianceState:
    """Quadrature covariance form of the exponent (vacuum maps to V = I/2)."""
    return moments_to_covariance(moments(state))
