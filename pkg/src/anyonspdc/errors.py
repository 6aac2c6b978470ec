"""Exception and warning types raised across the package."""


class AnyonSPDCError(Exception):
    """Base class for all errors raised by anyonspdc."""


class DomainError(AnyonSPDCError, ValueError):
    """An argument lies outside the domain of the operation."""


class GridError(AnyonSPDCError, ValueError):
    """Grids are malformed, mismatched, or not square."""


class PairingError(GridError):
    """A grid lacks the exact +x/-x sample pairing an exchange test needs."""


class WindowError(AnyonSPDCError):
    """A sampling window does not hold enough of the function's mass."""


class SamplingError(AnyonSPDCError):
    """A grid is too coarse for the oscillations it must resolve."""


class PreconditionError(AnyonSPDCError):
    """An input violates a physical precondition of the formula."""


class IllPosedError(AnyonSPDCError):
    """The requested estimate is undefined for this input."""


class NumericalQualityError(AnyonSPDCError):
    """A computed quantity breached an invariant beyond rounding slack."""


class ConfigError(AnyonSPDCError):
    """Malformed experiment configuration."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class SupportWarning(UserWarning):
    """The pump extends beyond the waveguide and will be truncated."""


class ClampWarning(UserWarning):
    """A probability slightly outside [0, 1] was clamped."""
