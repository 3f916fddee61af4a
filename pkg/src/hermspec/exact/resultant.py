"""
Resultants over Q and over Q[z].

A resultant in x whose second argument has coefficients in Q[z] is computed by
evaluation and interpolation: the Sylvester determinant is taken (Bareiss) at
enough integer values of z to pin down its degree, then interpolated back.
"""

import logging
from fractions import Fraction
from math import comb
from typing import List, Sequence

from hermspec.exact.matrix import ExactMatrix, det_exact
from hermspec.exact.polynomial import Polynomial, interpolate

logger = logging.getLogger('hermspec.exact.resultant')


def sylvester_matrix(p: Sequence[Fraction], q: Sequence[Fraction]) -> ExactMatrix:
    """
    Sylvester matrix of two coefficient lists (ascending order).

    The formal degrees are len - 1 even when a leading entry is zero, so the
    matrix specializes correctly under substitution.
    """
    m = len(p) - 1
    n = len(q) - 1
    size = m + n
    p_desc = list(reversed(p))
    q_desc = list(reversed(q))
    rows = []
    for shift in range(n):
        rows.append([Fraction(0)] * shift + p_desc + [Fraction(0)] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([Fraction(0)] * shift + q_desc + [Fraction(0)] * (size - shift - n - 1))
    return ExactMatrix(tuple(tuple(row) for row in rows))


def resultant_scalar(p: Polynomial, q: Polynomial) -> Fraction:
    """Res_x(p, q) for two polynomials with rational coefficients."""
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    return det_exact(sylvester_matrix(p.coeffs, q.coeffs))


def resultant(p: Polynomial, q_coeffs: Sequence[Polynomial]) -> Polynomial:
    """
    Res_x(p(x), q(x, z)) as a polynomial in z.

    Args:
        p: Polynomial in x with rational coefficients
        q_coeffs: Coefficients of q in ascending powers of x, each a polynomial in z

    Returns:
        The resultant as a Polynomial in z
    """
    z_degree = max(c.degree for c in q_coeffs)
    bound = p.degree * z_degree
    nodes = list(range(bound + 1))
    values = []
    for z in nodes:
        specialized = [c(z) for c in q_coeffs]
        values.append(det_exact(sylvester_matrix(p.coeffs, specialized)))
    logger.debug(f"Interpolating resultant of degree <= {bound} from {len(nodes)} samples")
    return interpolate(nodes, values)


def shifted_coefficients(p: Polynomial) -> List[Polynomial]:
    """Coefficients of p(x + z) in ascending powers of x, each a polynomial in z."""
    d = p.degree
    result = []
    for j in range(d + 1):
        coeffs = [Fraction(0)] * (d - j + 1)
        for k in range(j, d + 1):
            coeffs[k - j] += p.coeffs[k] * comb(k, j)
        result.append(Polynomial(coeffs))
    return result
