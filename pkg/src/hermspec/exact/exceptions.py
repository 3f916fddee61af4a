"""
Exceptions for the exact spectral analysis core.

Every failure in hermspec is either a problem with what the caller handed in
(InvalidInputError, exit code 1) or an internal contradiction that should be
impossible for valid input (InconsistencyError, exit code 2). The CLI maps
these families onto process exit codes and structured error JSON.
"""

from typing import Any, Dict, Optional


class HermspecError(Exception):
    """Base exception for all hermspec errors."""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Structured form used for the error stream."""
        return {
            'type': type(self).__name__,
            'message': str(self),
            'exit_code': self.exit_code,
            'details': self.details,
        }


class InvalidInputError(HermspecError):
    """Raised when the caller's input violates a precondition."""
    exit_code = 1


class InconsistencyError(HermspecError):
    """Raised when an internal consistency check fails."""
    exit_code = 2


class NotSquareError(InvalidInputError):
    """Raised when a square matrix is required."""
    pass


class SingularMatrixError(InvalidInputError):
    """Raised when a linear system has a singular matrix."""
    pass


class NotMonicError(InvalidInputError):
    """Raised when a monic polynomial is required."""
    pass


class LengthMismatchError(InvalidInputError):
    """Raised when moment sequences are too short or inconsistent."""
    pass


class NotHermitianError(InvalidInputError):
    """Raised when entry (i, j) is not the conjugate of entry (j, i)."""
    pass


class InsufficientMomentsError(InvalidInputError):
    """Raised when a Hankel construction needs more moments than supplied."""
    pass


class ConsecutiveZerosError(InvalidInputError):
    """Raised when a Hankel-polynomial sequence has two consecutive zeros."""
    pass


class NotARootError(InvalidInputError):
    """Raised when a value is not a root of the minimal polynomial."""
    pass


class NotRealRootedError(InvalidInputError):
    """Raised when the determinant ladder rules out a real-rooted input."""
    pass


class DegreeTooSmallError(InvalidInputError):
    """Raised when a construction needs at least two distinct roots."""
    pass


class SingleEigenvalueError(InvalidInputError):
    """Raised when the minimal gap is requested for a single eigenvalue."""
    pass


class BadParamsError(InvalidInputError):
    """Raised when rate-analysis parameters are out of range."""
    pass


class DegenerateGapError(InvalidInputError):
    """Raised when a lattice is requested for a single distinct eigenvalue."""
    pass


class ParseError(InvalidInputError):
    """Raised when an input document cannot be parsed."""
    pass


class NonzeroRemainderError(InconsistencyError):
    """Raised when an exact polynomial division leaves a remainder."""
    pass


class SingularHankelError(InconsistencyError):
    """Raised when D_m vanishes although the ladder says it cannot."""
    pass


class NonIntegerMultiplicityError(InconsistencyError):
    """Raised when a multiplicity formula yields a non-integer."""
    pass


class ReconstructionFailureError(InconsistencyError):
    """Raised when the product of factors differs from the input polynomial."""
    pass


class SyzygyViolationError(InconsistencyError):
    """Raised when a deflated Hankel determinant fails to vanish."""
    pass


class OddPartNonzeroError(InconsistencyError):
    """Raised when a root-difference resultant is not even in its parameter."""
    pass


class DerivativeZeroError(InconsistencyError):
    """Raised when a Newton step meets a vanishing derivative."""
    pass


class SandwichViolationError(InconsistencyError):
    """Raised in strict mode when a rate sandwich bound fails."""
    pass


class RootOnOriginBoundaryError(InconsistencyError):
    """Raised when a factor vanishes at the lattice origin."""
    pass
