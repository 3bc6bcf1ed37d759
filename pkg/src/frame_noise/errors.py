"""Exception types raised by the analysis routines."""


class FrameError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FrameError, ValueError):
    """An attacker record violates the triangle or timing-window invariants."""

    def __init__(self, message, index=None):
        self.index = index
        if index is not None:
            message = f"attackers[{index}]: {message}"
        super().__init__(message)


class NonFiniteParameter(ValidationError):
    pass


class PeakOrderViolation(ValidationError):
    pass


class WindowOrderViolation(ValidationError):
    pass


class EmptyInput(FrameError, ValueError):
    pass


class LengthMismatch(FrameError, ValueError):
    pass


class CombinationBudgetExceeded(FrameError, RuntimeError):
    pass


class ZeroBaseline(FrameError, ZeroDivisionError):
    pass


class EmptySample(FrameError, ValueError):
    pass


class SchemaError(FrameError, ValueError):
    """Case file does not follow the expected JSON layout."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
