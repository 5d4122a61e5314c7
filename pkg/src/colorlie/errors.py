"""Exception types shared across the package.

Everything derives from ColorLieError so callers can catch library faults
in one clause. Validation-style routines (axiom checks, bicharacter checks)
do NOT raise on mathematical failure -- they return reports; exceptions are
reserved for malformed inputs and broken preconditions.
"""


class ColorLieError(Exception):
    """Base class for all errors raised by this package."""


class ConductorMismatch(ColorLieError):
    """Two scalars with different conductors were combined without lifting."""


class NotDivisible(ColorLieError):
    """Attempted to lift a scalar to a conductor the current one does not divide."""


class ArityMismatch(ColorLieError):
    """Group elements with different numbers of components were combined."""


class DimensionMismatch(ColorLieError):
    """Vector or matrix dimensions do not fit the operation."""


class AmbientMismatch(ColorLieError):
    """Subspaces of different ambient dimensions were combined."""


class NoSolution(ColorLieError):
    """A linear system has no solution (right side outside the column space)."""


class TooFewArguments(ColorLieError):
    """A left-normed bracket needs at least two arguments."""


class NonHomogeneous(ColorLieError):
    """A degree-dependent operation received a vector mixing graded components."""


class AlgebraMismatch(ColorLieError):
    """Two graded maps over different algebras were combined."""


class BadArity(ColorLieError):
    """The order n of an n-derivation computation is out of range."""


class NotClosed(ColorLieError):
    """A map space is not closed under the color bracket; carries the offending pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class PreconditionFailed(ColorLieError):
    """An algebra-level hypothesis (perfect, zero center, ...) does not hold."""


class ParseError(ColorLieError):
    """A scalar string or algebra file is malformed."""


class ValidationError(ColorLieError):
    """A parsed algebra file violates a structural invariant; carries a location."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location
