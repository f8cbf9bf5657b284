"""Normal-mode decomposition of the coupled Hamiltonian and bath-induced rates.

The Hamiltonian

    H = omega (a'a + b'b) + kappa (a'b + b'a) + lambda (ab + a'b')

separates in the center-of-mass and relative modes e = (a+b)/sqrt2,
f = (a-b)/sqrt2 into two independent single-mode squeezing problems with
frequencies omega+kappa and omega-kappa and squeezing strengths +lambda/2
and -lambda/2 respectively.  Each is diagonalized by a real Bogoliubov
transformation

    e = alpha1 l - beta1 l',      f = alpha2 m - beta2 m',

whose coefficients are fixed by requiring the residual l^2, l'^2 (resp.
m^2, m'^2) terms to cancel.  Because the squeezing terms of the e and f
modes enter with opposite signs, beta1 >= 0 while beta2 <= 0 for
lambda >= 0.  The normal-mode frequencies come out as

    omega_l = sqrt((omega+kappa)^2 - lambda^2),
    omega_m = sqrt((omega-kappa)^2 - lambda^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NegativeParameter
from .model import ModelParams, validate

__all__ = ["BogoliubovDecomposition", "RateSet", "diagonalize", "rates"]


@dataclass(frozen=True)
class BogoliubovDecomposition:
    """Bogoliubov coefficients and normal-mode frequencies.

    Satisfies alpha1^2 - beta1^2 = 1 and alpha2^2 - beta2^2 = 1.
    """

    alpha1: float
    beta1: float
    alpha2: float
    beta2: float
    omega_l: float
    omega_m: float


@dataclass(frozen=True)
class RateSet:
    """Noise correlations of the eigenmode bath coupling and derived rates.

    ff_corr, qq_corr are the normal-ordered noise correlations damping the
    l and m modes; ff_corr_th, qq_corr_th are their thermal (anti-normal)
    counterparts, nonzero only for nbar > 0.  gamma1..gamma6 are the
    combinations entering the bare-mode form of the eigenmode master
    equation.
    """

    ff_corr: float
    qq_corr: float
    gamma1: float
    gamma2: float
    gamma3: float
    gamma4: float
    gamma5: float
    gamma6: float
    ff_corr_th: float = 0.0
    qq_corr_th: float = 0.0


def diagonalize(params: ModelParams) -> BogoliubovDecomposition:
    """Diagonalize the generalized two-oscillator Hamiltonian.

    The input must satisfy the :func:`coupledosc.model.validate` invariants,
    which guarantee real coefficients and positive normal-mode frequencies.
    """
    validate(params)
    omega, kappa, lam = params.omega, params.kappa, params.lambda_

    # tanh(2 r1) = lambda/(omega+kappa) removes the l^2 + l'^2 terms;
    # tanh(2 s2) = -lambda/(omega-kappa) removes m^2 + m'^2 (opposite-sign
    # squeezing of the relative mode).
    r1 = 0.5 * math.atanh(lam / (omega + kappa))
    s2 = -0.5 * math.atanh(lam / (omega - kappa))
    alpha1, beta1 = math.cosh(r1), math.sinh(r1)
    alpha2, beta2 = math.cosh(s2), math.sinh(s2)

    alpha11 = ((2 * omega + kappa) * alpha1**2 - 2 * lam * alpha1 * beta1 + kappa * beta1**2) / 2
    alpha22 = ((2 * omega + kappa) * beta1**2 - 2 * lam * alpha1 * beta1 + kappa * alpha1**2) / 2
    beta11 = ((2 * omega - kappa) * alpha2**2 + 2 * lam * alpha2 * beta2 - kappa * beta2**2) / 2
    beta22 = ((2 * omega - kappa) * beta2**2 + 2 * lam * alpha2 * beta2 - kappa * alpha2**2) / 2

    return BogoliubovDecomposition(
        alpha1=alpha1,
        beta1=beta1,
        alpha2=alpha2,
        beta2=beta2,
        omega_l=alpha11 + alpha22,
        omega_m=beta11 + beta22,
    )


def rates(decomp: BogoliubovDecomposition, bath_rate: float, nbar: float = 0.0) -> RateSet:
    """Noise correlations and bare-mode rates for a flat bath.

    Parameters
    ----------
    decomp
        Normal-mode decomposition of the system Hamiltonian.
    bath_rate
        Flat-spectrum bath coupling rate (one bath per oscillator,
        symmetric coupling).
    nbar
        Mean thermal occupancy of both baths.  The flat spectrum carries a
        single occupancy, so the thermal correlations are the
        zero-temperature ones scaled by nbar (anti-normal ordered) and
        nbar+1 (normal ordered).
    """
    if bath_rate < 0:
        raise NegativeParameter(f"bath_rate must be >= 0, got {bath_rate}")
    if nbar < 0:
        raise NegativeParameter(f"nbar must be >= 0, got {nbar}")

    w1 = (decomp.alpha1 - decomp.beta1) ** 2
    w2 = (decomp.alpha2 - decomp.beta2) ** 2
    ff = 2.0 * bath_rate * (1.0 + nbar) * w1
    qq = 2.0 * bath_rate * (1.0 + nbar) * w2
    ff_th = 2.0 * bath_rate * nbar * w1
    qq_th = 2.0 * bath_rate * nbar * w2

    a1, b1, a2, b2 = decomp.alpha1, decomp.beta1, decomp.alpha2, decomp.beta2
    return RateSet(
        ff_corr=ff,
        qq_corr=qq,
        gamma1=(ff * a1**2 + qq * a2**2) / 2,
        gamma2=(ff * b1**2 + qq * b2**2) / 2,
        gamma3=(ff * a1 * b1 + qq * a2 * b2) / 2,
        gamma4=(ff * a1**2 - qq * a2**2) / 2,
        gamma5=(ff * b1**2 - qq * b2**2) / 2,
        gamma6=(ff * a1 * b1 - qq * a2 * b2) / 2,
        ff_corr_th=ff_th,
        qq_corr_th=qq_th,
    )
