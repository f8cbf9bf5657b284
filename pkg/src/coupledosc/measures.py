"""Comparison quantities: logarithmic negativity, one-mode reduction, fidelity.

Internal covariance convention is vacuum = I/2 throughout.  The one-mode
fidelity formula is stated in the vacuum = I convention, so blocks are
doubled at that call boundary only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import CharExponent, CovarianceState, physicality_margin, to_covariance
from .errors import NonzeroMean, UnphysicalCovariance

__all__ = ["OneModeState", "log_negativity", "one_mode_reduce", "fidelity"]

_MEAN_TOL = 1e-12


@dataclass(frozen=True)
class OneModeState:
    """2x2 covariance block and mean of a single mode (vacuum A = I/2)."""

    A: np.ndarray
    mean: np.ndarray


def log_negativity(cov: CovarianceState) -> float:
    """Logarithmic negativity max(0, -ln(2 nu)) of a two-mode Gaussian state.

    nu is the smallest symplectic eigenvalue of the partially transposed
    covariance, computed from the block determinants
    sigma = det A1 + det B1 - 2 det C1.
    """
    V = cov.V
    if physicality_margin(V) < -1e-8:
        raise UnphysicalCovariance("covariance violates the uncertainty bound")

    A = V[:2, :2]
    B = V[2:, 2:]
    C = V[:2, 2:]
    sigma = np.linalg.det(A) + np.linalg.det(B) - 2.0 * np.linalg.det(C)
    det_v = np.linalg.det(V)

    disc = sigma * sigma - 4.0 * det_v
    tol = 1e-12 * max(1.0, sigma * sigma)
    if disc < -tol:
        raise UnphysicalCovariance(f"complex symplectic spectrum (disc={disc:.3e})")
    nu_sq = 0.5 * sigma - 0.5 * math.sqrt(max(disc, 0.0))
    if nu_sq < -tol:
        raise UnphysicalCovariance(f"negative nu^2 = {nu_sq:.3e}")
    nu = math.sqrt(max(nu_sq, 0.0))
    if nu <= 1e-12:
        raise UnphysicalCovariance("smallest symplectic eigenvalue vanished")
    return max(0.0, -math.log(2.0 * nu))


def one_mode_reduce(state: CharExponent | CovarianceState, mode: str) -> OneModeState:
    """Reduced one-mode state: the covariance block and mean of one mode.

    Setting the other mode's characteristic variables to zero is the same
    as taking the corresponding 2x2 block of V.
    """
    if mode not in ("a", "b"):
        raise ValueError(f"mode must be 'a' or 'b', got {mode!r}")
    cov = to_covariance(state) if isinstance(state, CharExponent) else state
    i = 0 if mode == "a" else 2
    return OneModeState(A=cov.V[i : i + 2, i : i + 2].copy(), mean=cov.mean[i : i + 2].copy())


def fidelity(s1: OneModeState, s2: OneModeState) -> float:
    """Quantum fidelity between two zero-mean one-mode Gaussian states.

    Uses F = 2 / (sqrt(det[A1+A2] + P) - sqrt(P)) with
    P = (det A1 - 1)(det A2 - 1) in the vacuum = I convention, evaluated
    through the cancellation-free rearrangement
    2 (sqrt(det[A1+A2] + P) + sqrt(P)) / det[A1+A2].
    """
    for s in (s1, s2):
        if np.max(np.abs(s.mean)) > _MEAN_TOL:
            raise NonzeroMean(
                f"fidelity is defined here for zero-mean states, |mean| = "
                f"{np.max(np.abs(s.mean)):.3e}"
            )
    A1 = 2.0 * s1.A
    A2 = 2.0 * s2.A
    d1 = float(np.linalg.det(A1))
    d2 = float(np.linalg.det(A2))
    if d1 < 1.0 - 1e-9 or d2 < 1.0 - 1e-9:
        raise UnphysicalCovariance(
            f"one-mode covariance below the Heisenberg bound (det = {min(d1, d2)})"
        )
    p = max(d1 - 1.0, 0.0) * max(d2 - 1.0, 0.0)
    x = float(np.linalg.det(A1 + A2))
    if x < 1e-12:
        raise UnphysicalCovariance("degenerate covariance sum in fidelity")
    f = 2.0 * (math.sqrt(x + p) + math.sqrt(p)) / x
    if f > 1.0 + 1e-9:
        raise UnphysicalCovariance(f"fidelity {f} exceeds 1 beyond tolerance")
    return min(f, 1.0)
