"""Two coupled quantum harmonic oscillators under competing Markovian damping models.

The package evolves the generalized two-oscillator Hamiltonian

    H = omega (a'a + b'b) + kappa (a'b + b'a) + lambda (ab + a'b')

under (i) local per-oscillator Lindblad damping and (ii) the eigenmode
("nonlocal") Lindblad damping obtained by coupling each oscillator to its
own flat bath, and quantifies how the two models disagree: excitation
numbers, logarithmic negativity, one-mode fidelity, and steady states.
"""

from .bogoliubov import BogoliubovDecomposition, RateSet, diagonalize, rates
from .dynamics import (
    CharExponent,
    CovarianceState,
    Moments,
    evolve,
    initial_exponent,
    moments,
    moments_to_covariance,
    to_covariance,
)
from .generators import (
    GeneratorMatrices,
    build_local,
    build_nonlocal,
    build_nonlocal_thermal,
)
from .measures import OneModeState, fidelity, log_negativity, one_mode_reduce
from .model import InitialState, ModeState, ModelParams, validate, validate_initial
from .steady import (
    SteadyResult,
    SweepRow,
    canonical_covariance,
    ground_state_covariance,
    nbar_sweep,
    normal_mode_thermal_covariance,
    steady_exponent,
)

__all__ = [
    "BogoliubovDecomposition",
    "CharExponent",
    "CovarianceState",
    "GeneratorMatrices",
    "InitialState",
    "ModeState",
    "ModelParams",
    "Moments",
    "OneModeState",
    "RateSet",
    "SteadyResult",
    "SweepRow",
    "build_local",
    "build_nonlocal",
    "build_nonlocal_thermal",
    "canonical_covariance",
    "diagonalize",
    "evolve",
    "fidelity",
    "ground_state_covariance",
    "initial_exponent",
    "log_negativity",
    "moments",
    "moments_to_covariance",
    "nbar_sweep",
    "normal_mode_thermal_covariance",
    "one_mode_reduce",
    "rates",
    "steady_exponent",
    "to_covariance",
    "validate",
    "validate_initial",
]

__version__ = "0.1.0"
