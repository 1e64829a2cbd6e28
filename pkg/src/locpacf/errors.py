"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: usage/argument problems -> 1,
data problems (parsing, bounds, degenerate input) -> 2, numerical
failures -> 3, verification failures -> 4.
"""


class LocpacfError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(LocpacfError, ValueError):
    """An argument violates a documented precondition."""


class DataError(LocpacfError):
    """Input data cannot be used (parse failure, NaN/inf, too short)."""


class BoundaryError(DataError):
    """A window exceeds the series bounds under the strict policy."""


class InsufficientWindowError(DataError):
    """Effective window mass is too small for the requested lags."""


class DegenerateInputError(DataError):
    """Input has no usable variation (e.g. zero sample variance)."""


class NumericalError(LocpacfError):
    """A linear system stayed unusable after maximum regularization."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class VerificationError(LocpacfError):
    """A verification property suite reported failures."""
