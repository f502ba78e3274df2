"""Exceptions shared across the package."""


class CoefficientOverflowError(ArithmeticError):
    """An exact integer left the signed 64-bit range.

    All arithmetic in this package is exact; rather than silently promoting
    to huge integers (or wrapping, as a fixed-width implementation would),
    any value outside [-2^63, 2^63 - 1] is reported loudly.
    """


class InternalConsistencyError(RuntimeError):
    """A built-in cross-check failed, e.g. a closed form produced a value
    that an exactness assertion (integral division, nonnegativity) rejects.

    This always indicates a transcription or logic bug, never bad user input.
    """
