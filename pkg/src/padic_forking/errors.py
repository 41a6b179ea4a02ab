"""Exception types shared across the package."""

from __future__ import annotations


class PadicError(Exception):
    """Base class for every error raised by this package."""


class NonPrime(PadicError, ValueError):
    """The modulus handed to a :class:`~padic_forking.padic_core.Context` is not prime."""


class ContextMismatch(PadicError, ValueError):
    """Operands were built in different contexts."""


class NonUnit(PadicError, ArithmeticError):
    """An inverse was requested for a scalar divisible by ``p``."""


class PrecisionExhausted(PadicError, ArithmeticError):
    """A division would need digits the current precision does not carry."""


class NotIndependent(PadicError, ValueError):
    """A family expected to be p-independent is not."""


class AmbientTooSmall(PadicError, ValueError):
    """No fresh unit direction is left in the ambient module."""


class NotARealization(PadicError, ValueError):
    """An element does not realize the type defining a geometry."""


class PreconditionViolated(PadicError, ValueError):
    """An operation was called outside the situation it is defined for."""


class ContextTooLarge(PadicError, ValueError):
    """The context is too big for exhaustive enumeration."""


class UnknownSuite(PadicError, KeyError):
    """No property suite is registered under the requested name."""


class ParseError(PadicError, ValueError):
    """A problem file does not follow the grammar."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DimensionMismatch(ParseError):
    """A vector in a problem file has the wrong number of coordinates."""
