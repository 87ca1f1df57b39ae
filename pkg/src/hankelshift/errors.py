"""Exception types shared by the exact-computation modules.

Every error here signals either a broken precondition or a violated
mathematical identity.  None of them is recoverable by retrying with the
same inputs; callers either fix the input or treat the error as a bug
report about the library itself.
"""


class ExactComputationError(Exception):
    """Base class for all failures raised by this package."""


class NonExactDivision(ExactComputationError):
    """An integer or polynomial division left a remainder where exactness
    was required.  Inside the determinant engines this means a violated
    elimination identity, i.e. a bug, never a data problem."""


class NonUnitConstantTerm(ExactComputationError):
    """Series reciprocal requested for a series whose constant term is not
    a unit (+1 or -1)."""


class NonIntegerResult(ExactComputationError):
    """A rational product that must collapse to an integer did not."""


class DimensionTooLarge(ExactComputationError):
    """Cofactor expansion refused to run: the matrix exceeds the cost guard."""


class CondensationUnavailable(ExactComputationError):
    """Condensation was explicitly requested for a matrix whose condensation
    pyramid contains a zero interior minor."""


class EngineDisagreement(ExactComputationError):
    """Two determinant engines returned different values for one matrix."""

    def __init__(self, message: str, results=None):
        super().__init__(message)
        self.results = dict(results or {})


class IdentityViolation(ExactComputationError):
    """A matrix identity that must hold structurally failed to hold."""


class ZeroDivisorEncountered(ExactComputationError):
    """A recursion divisor vanished although the defining identity requires
    every table entry to be nonzero.  Hitting this falsifies the
    nonvanishing assumption and must be reported, never masked."""


class UnsupportedFamily(ExactComputationError):
    """The requested closed form is not defined for this sequence family."""
