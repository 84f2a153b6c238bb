"""Exception hierarchy shared by every bcx module."""


class BcxError(Exception):
    """Base class for domain errors raised by bcx."""


class DimensionError(BcxError, ValueError):
    """Operands have incompatible lengths or shapes."""


class NotInvertible(BcxError, ArithmeticError):
    """A scalar, matrix or map has no inverse.

    ``components`` names the idempotent parts that failed (``"minus"``,
    ``"plus"``); ``classification`` is set for scalars.
    """

    def __init__(self, message, components=(), classification=None):
        super().__init__(message)
        self.components = tuple(components)
        self.classification = classification


class Singular(BcxError, ArithmeticError):
    """A complex matrix has no inverse at the current pivot tolerance."""


class NoSolution(BcxError):
    """A linear system is inconsistent.

    For bicomplex systems ``components`` lists the inconsistent parts.
    """

    def __init__(self, message, components=()):
        super().__init__(message)
        self.components = tuple(components)


class ParseError(ValueError):
    """Malformed literal. ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
