"""
Hankel matrices of moment sequences.

The determinant ladder D_k = det H_k counts distinct roots and rules out
non-real roots (positive D_1..D_m followed by zeros). Bordered Hankel
determinants give the Hankel polynomials, whose sign sequences count roots
in an interval.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from hermspec.entities.ladder import HankelLadder
from hermspec.entities.moments import MomentSeq
from hermspec.exact.exceptions import ConsecutiveZerosError, InsufficientMomentsError, InvalidInputError
from hermspec.exact.matrix import ExactMatrix, det_exact, hankel_matrix, rank_exact
from hermspec.exact.polynomial import Polynomial

logger = logging.getLogger('hermspec.analysis.hankel')


def build_hankel(t: MomentSeq, k: int) -> ExactMatrix:
    """
    k x k Hankel matrix [t_{i+j}] for i, j = 0..k-1.

    Raises:
        InsufficientMomentsError: If t has fewer than 2k - 1 values
    """
    if k > 0 and len(t) < 2 * k - 1:
        raise InsufficientMomentsError(f"H_{k} needs {2 * k - 1} moments, got {len(t)}")
    return hankel_matrix(t.values, k)


def _sign_counts(sequence: Sequence[Fraction]) -> Tuple[int, int]:
    """(permanences, variations) of a sequence, skipping zeros."""
    signs = [1 if v > 0 else -1 for v in sequence if v != 0]
    permanences = sum(1 for a, b in zip(signs, signs[1:]) if a == b)
    return permanences, len(signs) - 1 - permanences


def sign_variations(sequence: Sequence[Fraction]) -> int:
    """Number of sign changes, zeros skipped."""
    return _sign_counts(sequence)[1]


def hankel_ladder(t: MomentSeq, n: int) -> HankelLadder:
    """
    Determinant ladder D_1..D_n with the real-rootedness verdict.

    An invalid pattern is reported (valid_real=False, offending_index set),
    not raised; m then falls back to the rank of H_n.

    Raises:
        InsufficientMomentsError: If t has fewer than 2n - 1 values
    """
    if n > 0 and len(t) < 2 * n - 1:
        raise InsufficientMomentsError(f"ladder of order {n} needs {2 * n - 1} moments, got {len(t)}")
    dets = [det_exact(build_hankel(t, k)) for k in range(1, n + 1)]
    last_nonzero = max((k for k, d in enumerate(dets, start=1) if d != 0), default=0)
    offending: Optional[int] = None
    for k in range(1, last_nonzero + 1):
        if dets[k - 1] <= 0:
            offending = k
            break
    valid = offending is None
    m = last_nonzero if valid else rank_exact(build_hankel(t, n))
    permanences, variations = _sign_counts([Fraction(1)] + dets[:max(last_nonzero, m)])
    ladder = HankelLadder(
        dets=dets,
        m=m,
        valid_real=valid,
        offending_index=offending,
        sign_permanences=permanences,
        sign_variations=variations,
    )
    logger.debug(f"Hankel ladder of order {n}: {ladder.get_summary()}")
    return ladder


def hankel_polynomial_coeffs(t: MomentSeq, k: int) -> Polynomial:
    """
    Hankel polynomial of order k as a polynomial in x.

    The bordered determinant has rows (t_i, ..., t_{i+k}) for i < k and last
    row (1, x, ..., x^k); expanding along the last row gives the coefficients.
    Its leading coefficient is D_k. Order 0 is the constant 1.

    Raises:
        InsufficientMomentsError: If t has fewer than 2k values
    """
    if k == 0:
        return Polynomial.constant(1)
    if len(t) < 2 * k:
        raise InsufficientMomentsError(f"Hankel polynomial of order {k} needs {2 * k} moments, got {len(t)}")
    rows = [[t[i + j] for j in range(k + 1)] for i in range(k)]
    coeffs = []
    for j in range(k + 1):
        minor = ExactMatrix(tuple(tuple(row[c] for c in range(k + 1) if c != j) for row in rows))
        sign = 1 if (k + j) % 2 == 0 else -1
        coeffs.append(sign * det_exact(minor))
    return Polynomial(coeffs)


def hankel_polynomial(t: MomentSeq, k: int, x: Fraction) -> Fraction:
    """Evaluate the Hankel polynomial of order k at x."""
    return hankel_polynomial_coeffs(t, k)(x)


def hankel_sequence(t: MomentSeq, m: int) -> List[Polynomial]:
    """Hankel polynomials of orders 0..m."""
    return [hankel_polynomial_coeffs(t, k) for k in range(m + 1)]


def _sequence_at(polys: List[Polynomial], x: Fraction) -> List[Fraction]:
    values = [p(x) for p in polys]
    for i in range(len(values) - 1):
        if values[i] == 0 and values[i + 1] == 0:
            raise ConsecutiveZerosError(
                f"Hankel polynomials of orders {i} and {i + 1} both vanish at {x}; perturb the endpoint",
                {'point': str(x), 'order': i},
            )
    return values


def variations_at(polys: List[Polynomial], x: Fraction) -> int:
    """
    Sign variations of the Hankel sequence at x, zeros skipped.

    For moments with positive weights this is m minus the number of distinct
    roots <= x, so a root sitting exactly on x is already counted.

    Raises:
        ConsecutiveZerosError: If two consecutive orders vanish at x
    """
    return sign_variations(_sequence_at(polys, Fraction(x)))


def count_roots_in_interval(t: MomentSeq, m: int, a: Fraction, b: Fraction) -> int:
    """
    Number of distinct roots in the open interval ]a, b[.

    Uses the sign variations of 1, H_1(x), ..., H_m(x) at both endpoints.

    Raises:
        InvalidInputError: If a >= b
        ConsecutiveZerosError: If an endpoint sequence has two consecutive zeros
    """
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise InvalidInputError(f"interval endpoints must satisfy a < b, got a={a}, b={b}")
    polys = hankel_sequence(t, m)
    count = variations_at(polys, a) - variations_at(polys, b)
    logger.debug(f"{count} distinct root(s) in ]{a}, {b}[")
    return count
