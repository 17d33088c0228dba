"""Exception types raised across the package."""


class FreeByCyclicError(Exception):
    """Base class for all package errors."""


class ValidationError(FreeByCyclicError, ValueError):
    """Malformed graph or graph map."""


class InconsistentEndpoints(ValidationError):
    """An edge image does not run between the images of the edge's endpoints."""


class UnknownEdge(ValidationError):
    """An edge image mentions an edge that does not exist."""


class DSLSyntaxError(ValidationError):
    """Unparseable graph-map document; carries line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + loc)


class TheoryViolation(FreeByCyclicError, ArithmeticError):
    """An identity guaranteed by the theory failed; indicates a bug upstream."""


class NonexactDivision(TheoryViolation):
    """A division expected to be exact left a remainder."""


class ZeroPolynomial(FreeByCyclicError, ValueError):
    pass


class ReducibleInput(FreeByCyclicError, ValueError):
    """The transition matrix is not irreducible."""


class NotInCone(FreeByCyclicError, ValueError):
    pass


class NotPrimitive(FreeByCyclicError, ValueError):
    pass


class MalformedNormalization(FreeByCyclicError, ValueError):
    pass


class NotOrientableBase(FreeByCyclicError, ValueError):
    pass


class TooLarge(FreeByCyclicError, ValueError):
    """Input exceeds the size an exponential oracle accepts."""


class AmbiguousRoot(FreeByCyclicError, ArithmeticError):
    """Two distinct roots tie in modulus at the extremum being selected."""
