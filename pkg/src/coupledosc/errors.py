"""Exception types shared across the package."""


class CoupledOscError(Exception):
    """Base class for every error raised by this package."""


class NegativeParameter(CoupledOscError, ValueError):
    """A rate, occupancy, or frequency that must be nonnegative/positive is not."""


class StabilityViolation(CoupledOscError, ValueError):
    """Couplings violate the oscillatory-stability region of the model."""


class AsymmetricDamping(CoupledOscError, ValueError):
    """The eigenmode damping model requires gamma_a == gamma_b."""


class AsymmetricBath(CoupledOscError, ValueError):
    """The thermal eigenmode damping model requires nbar_a == nbar_b."""


class CutoffTooSmall(CoupledOscError, ValueError):
    """Fock-space truncation below the minimum of two levels per mode."""


class NotHurwitz(CoupledOscError, ArithmeticError):
    """Drift matrix has a nonnegative spectral abscissa; no unique steady state."""


class PhysicalityLoss(CoupledOscError, ArithmeticError):
    """A covariance matrix violates the uncertainty bound beyond tolerance."""


class UnphysicalCovariance(CoupledOscError, ArithmeticError):
    """A covariance block fed to an entanglement/fidelity formula is unphysical."""


class NonzeroMean(CoupledOscError, ValueError):
    """The one-mode fidelity formula is restricted to zero-mean states."""


class StepSizeUnderflow(CoupledOscError, ArithmeticError):
    """The fixed-step integrator would need an unreasonable number of steps."""


class ConfigError(CoupledOscError, ValueError):
    """A run configuration could not be parsed or is internally inconsistent."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if field is not None:
            prefix += f"field '{field}': "
        super().__init__(prefix + message)
