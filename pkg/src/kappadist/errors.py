"""Exception taxonomy shared by the whole library.

DomainError covers every invalid-input condition (bad parameters,
out-of-window moment orders, unsupported orders).  Numerical failures
(quadrature not converging, optimizer stuck) derive from
NumericalError so callers can map them to a distinct exit code.
"""


class KappaDistError(Exception):
    """Base class for all library errors."""


class DomainError(KappaDistError, ValueError):
    """Input outside the mathematical domain of an operation."""


class MomentDivergesError(DomainError):
    """Requested moment order is outside the existence window.

    The message names the violated constraint, e.g. ``m < alpha/kappa``.
    """

    def __init__(self, constraint, detail=""):
        self.constraint = constraint
        msg = f"moment diverges: violates {constraint}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class VarianceDivergesError(MomentDivergesError):
    """Variance does not exist for the given parameters."""


class DegenerateFamilyError(DomainError):
    """Family degenerates for the requested parameters (e.g. Type IV at kappa -> 0)."""


class UnsupportedOrderError(DomainError):
    """Requested derivative/distribution order is not implemented by design."""


class NumericalError(KappaDistError, RuntimeError):
    """Base class for numerical failures."""


class NoConvergenceError(NumericalError):
    """Quadrature / differentiation / root finding failed to reach tolerance."""


class FitNonConvergenceError(NumericalError):
    """Maximum-likelihood optimization did not converge; carries best-so-far."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class BoundaryFitError(FitNonConvergenceError):
    """Optimizer pinned kappa against the upper boundary of its domain."""


class InsufficientTailPointsError(DomainError):
    """Too few order statistics in the requested tail fraction."""
