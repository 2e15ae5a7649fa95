"""Exception types shared across the package."""


class SingwellError(Exception):
    """Base class for all package errors."""


class DomainError(SingwellError):
    """A parameter is outside its admissible range."""


class SingularityError(SingwellError):
    """Closed-form evaluation at a singular parameter (radius diverges)."""


class CollisionError(SingwellError):
    """A zero-angular-momentum path reached the origin and continuation
    was not requested."""


class StepFailureError(SingwellError):
    """The adaptive ODE integrator failed to meet its tolerance."""


class QuadratureError(SingwellError):
    """Adaptive quadrature did not converge; carries the error estimate."""

    def __init__(self, msg, estimate=None):
        super().__init__(msg)
        self.estimate = estimate


class WindowViolationError(SingwellError):
    """Requested evaluation point lies outside the validity window."""


class RootFindError(SingwellError):
    """Bracketed root search failed to converge."""


class GridResolutionError(SingwellError):
    """Radial grid fails the points-per-wavelength requirement."""


class InverseIterationError(SingwellError):
    """Inverse iteration stagnated (residual did not converge)."""


class IncompleteSpectrumError(SingwellError):
    """Spectral data does not extend far enough above the evaluation
    energy for the requested smoothing window."""


class BankNotBuiltError(SingwellError):
    """A cutoff bank was required before it was constructed."""


class MissingSlotError(SingwellError):
    """An estimate envelope was evaluated without a required constant."""


class NonEllipticityError(SingwellError):
    """Perturbed metric coefficient is not positive on the domain."""


class GridMismatchError(SingwellError):
    """Paired spectral pipelines were run on different grids."""


class ConfigError(SingwellError):
    """Experiment configuration failed validation; carries field paths."""

    def __init__(self, msg, field=None):
        super().__init__(f"{field}: {msg}" if field else msg)
        self.field = field


class DegenerateAlphaWarning(UserWarning):
    """1/omega is an integer: a self-intersection degenerates to the
    asymptote and the loop catalog is ill-defined at that index."""


class ClusterDegeneracyWarning(UserWarning):
    """Nearly degenerate eigenvalues detected; weights were aggregated."""
