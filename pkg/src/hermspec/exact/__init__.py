"""
Exact arithmetic core: rationals, polynomials, matrices and resultants.
"""

from hermspec.exact.exceptions import (
    BadParamsError,
    ConsecutiveZerosError,
    DegenerateGapError,
    DegreeTooSmallError,
    DerivativeZeroError,
    HermspecError,
    InconsistencyError,
    InsufficientMomentsError,
    InvalidInputError,
    LengthMismatchError,
    NonIntegerMultiplicityError,
    NonzeroRemainderError,
    NotARootError,
    NotHermitianError,
    NotMonicError,
    NotRealRootedError,
    NotSquareError,
    OddPartNonzeroError,
    ParseError,
    ReconstructionFailureError,
    RootOnOriginBoundaryError,
    SandwichViolationError,
    SingleEigenvalueError,
    SingularHankelError,
    SingularMatrixError,
    SyzygyViolationError,
)
from hermspec.exact.matrix import (
    ExactMatrix,
    det_exact,
    hankel_matrix,
    inverse_exact,
    rank_exact,
    solve_exact,
)
from hermspec.exact.polynomial import (
    Polynomial,
    interpolate,
    poly_derivative,
    poly_div_exact,
    poly_divmod,
    poly_eval,
)
from hermspec.exact.resultant import resultant, resultant_scalar, shifted_coefficients
from hermspec.exact.scalars import (
    ComplexExact,
    ExactScalar,
    ceil_sqrt,
    format_exact,
    ln_interval,
    sqrt_lower,
    sqrt_upper,
    to_exact,
)

__all__ = [
    # Exceptions
    'HermspecError',
    'InvalidInputError',
    'InconsistencyError',
    'NotSquareError',
    'SingularMatrixError',
    'NotMonicError',
    'LengthMismatchError',
    'NotHermitianError',
    'InsufficientMomentsError',
    'ConsecutiveZerosError',
    'NotARootError',
    'NotRealRootedError',
    'DegreeTooSmallError',
    'SingleEigenvalueError',
    'BadParamsError',
    'DegenerateGapError',
    'ParseError',
    'NonzeroRemainderError',
    'SingularHankelError',
    'NonIntegerMultiplicityError',
    'ReconstructionFailureError',
    'SyzygyViolationError',
    'OddPartNonzeroError',
    'DerivativeZeroError',
    'SandwichViolationError',
    'RootOnOriginBoundaryError',
    # Scalars
    'ExactScalar',
    'ComplexExact',
    'to_exact',
    'format_exact',
    'sqrt_lower',
    'sqrt_upper',
    'ceil_sqrt',
    'ln_interval',
    # Polynomials
    'Polynomial',
    'poly_eval',
    'poly_derivative',
    'poly_divmod',
    'poly_div_exact',
    'interpolate',
    # Matrices
    'ExactMatrix',
    'det_exact',
    'rank_exact',
    'solve_exact',
    'inverse_exact',
    'hankel_matrix',
    # Resultants
    'resultant',
    'resultant_scalar',
    'shifted_coefficients',
]
