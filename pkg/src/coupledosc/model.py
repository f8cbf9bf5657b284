"""Physical parameters and initial-state descriptions for the two-oscillator system.

Every other module consumes a validated :class:`ModelParams`. Rates and
frequencies share a single unit system (the CLI convention sets omega = 1,
so times are reported in units of 1/omega); the library itself is unit
agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NegativeParameter, StabilityViolation

__all__ = ["ModelParams", "ModeState", "InitialState", "validate", "validate_initial"]


@dataclass(frozen=True)
class ModelParams:
    """Parameters of the coupled-oscillator model.

    omega
        Angular frequency shared by both oscillators.
    kappa
        Beam-splitter (excitation-conserving) coupling strength.
    lambda_
        Two-mode-squeezing coupling strength.
    gamma_a, gamma_b
        Local damping rates of the two oscillators.
    nbar_a, nbar_b
        Mean thermal occupancies of the two baths (dimensionless).
    """

    omega: float
    kappa: float = 0.0
    lambda_: float = 0.0
    gamma_a: float = 0.0
    gamma_b: float = 0.0
    nbar_a: float = 0.0
    nbar_b: float = 0.0


@dataclass(frozen=True)
class ModeState:
    """Gaussian state of a single mode: displaced squeezed thermal.

    n0 is the thermal occupation, r/theta the squeezing magnitude and phase,
    displacement the coherent amplitude.
    """

    n0: float = 0.0
    r: float = 0.0
    theta: float = 0.0
    displacement: complex = 0j


@dataclass(frozen=True)
class InitialState:
    """Product (separable) initial state of the two modes."""

    mode_a: ModeState = ModeState()
    mode_b: ModeState = ModeState()

    @staticmethod
    def vacuum() -> "InitialState":
        return InitialState(ModeState(), ModeState())


def validate(params: ModelParams) -> ModelParams:
    """Check all parameter invariants and return the parameters unchanged.

    Raises
    ------
    NegativeParameter
        If omega is not strictly positive or any rate/occupancy is negative.
    StabilityViolation
        If the couplings leave the region where both normal-mode frequencies
        are real and positive.  The inequalities are strict with no slack:
        at equality a normal-mode frequency vanishes and the Bogoliubov
        coefficients diverge.
    """
    if not params.omega > 0:
        raise NegativeParameter(f"omega must be > 0, got {params.omega}")
    for name in ("gamma_a", "gamma_b", "nbar_a", "nbar_b"):
        value = getattr(params, name)
        if value < 0:
            raise NegativeParameter(f"{name} must be >= 0, got {value}")

    omega, kappa, lam = params.omega, params.kappa, params.lambda_
    # |kappa| < omega keeps both center-of-mass/relative mode frequencies
    # positive; without it the coefficient closed forms turn imaginary.
    if not abs(kappa) < omega:
        raise StabilityViolation(
            f"|kappa| must be < omega for positive normal-mode frequencies, "
            f"got kappa={kappa}, omega={omega}"
        )
    if not (abs(lam) < abs(omega - kappa) and abs(lam) < omega + kappa):
        raise StabilityViolation(
            f"|lambda| must be < |omega - kappa| and < omega + kappa, "
            f"got lambda={lam}, omega={omega}, kappa={kappa}"
        )
    return params


def validate_initial(init: InitialState) -> InitialState:
    """Check initial-state invariants (n0 >= 0, r >= 0 per mode)."""
    for label, mode in (("a", init.mode_a), ("b", init.mode_b)):
        if mode.n0 < 0:
            raise NegativeParameter(f"mode {label}: n0 must be >= 0, got {mode.n0}")
        if mode.r < 0:
            raise NegativeParameter(f"mode {label}: r must be >= 0, got {mode.r}")
    return init
