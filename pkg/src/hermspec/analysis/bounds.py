"""
Certified monotone bounds on the minimal root gap and on the extreme roots.

Both iterations are Newton's method started outside the root hull: on the
squared-difference polynomial G from the left for the gap, and on the minimal
polynomial from either side for the extremes. Outside the hull a real-rooted
polynomial is convex toward its nearest root, so every iterate is a valid
bound and the sequence is monotone. All iterates are exact rationals; once
denominators pass a threshold they are rounded in the direction that keeps
the bound valid.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from hermspec.analysis.moments import power_sums_from_coeffs
from hermspec.analysis.spectrum import minimal_polynomial_of
from hermspec.entities.iterations import ExtremalIteration, GapIteration, Side
from hermspec.exact.exceptions import (
    DegreeTooSmallError,
    DerivativeZeroError,
    InvalidInputError,
    OddPartNonzeroError,
    SingleEigenvalueError,
)
from hermspec.exact.polynomial import Polynomial, poly_derivative
from hermspec.exact.resultant import resultant, shifted_coefficients
from hermspec.exact.scalars import ceil_sqrt, ln_interval, round_down_relative, round_up_relative, sqrt_lower

logger = logging.getLogger('hermspec.analysis.bounds')

DEFAULT_MAX_DENOMINATOR = 10 ** 64


def default_max_iter(m: int, tol: Fraction) -> int:
    """Twice the (7/4)(m-1) ln(1/tol) estimate for the slowest (equidistant) spectrum."""
    tol = Fraction(tol)
    if tol >= 1:
        return 1
    _, ln_hi = ln_interval(1 / tol)
    return max(1, math.ceil(2 * Fraction(7, 4) * max(m - 1, 1) * ln_hi))


def reciprocal_sum_step(
    values: Sequence[Fraction],
    c: Fraction,
    weights: Optional[Iterable[Fraction]] = None,
) -> Fraction:
    """
    c + (sum w_i / (f_i - c))^{-1} for explicit values f_i.

    With f_i the roots this is the extremal step, with f_i the squared root
    differences it is the gap step, and with f_i = l^2 weighted by m - l it is
    the equidistant-spectrum recurrence.
    """
    c = Fraction(c)
    weight_list = list(weights) if weights is not None else [Fraction(1)] * len(values)
    total = sum((Fraction(w) / (Fraction(f) - c) for f, w in zip(values, weight_list)), Fraction(0))
    if total == 0:
        raise DerivativeZeroError(f"reciprocal sum vanishes at {c}")
    return c + 1 / total


def squared_difference_poly(pm: Polynomial) -> Polynomial:
    """
    Monic G(y) whose roots are the squared differences (p_i - p_j)^2, i < j.

    Built from Res_x(pm(x), pm(x + z)): the factor z^m is stripped, the rest is
    even in z, and y = z^2 is substituted.

    Raises:
        DegreeTooSmallError: If pm has fewer than two roots
        OddPartNonzeroError: If the stripped resultant is not even in z
    """
    m = pm.degree
    if m < 2:
        raise DegreeTooSmallError(f"squared differences need at least two roots, degree is {m}")
    r = resultant(pm, shifted_coefficients(pm))
    coeffs = list(r.coeffs) + [Fraction(0)] * max(0, m * m + 1 - len(r.coeffs))
    if any(c != 0 for c in coeffs[:m]):
        raise OddPartNonzeroError(f"root-difference resultant is not divisible by z^{m}; minimal polynomial not square-free")
    stripped = coeffs[m:]
    if any(c != 0 for c in stripped[1::2]):
        raise OddPartNonzeroError("root-difference resultant has a nonzero odd part")
    g = Polynomial(stripped[0::2])
    if g.degree != m * (m - 1) // 2:
        raise OddPartNonzeroError(f"squared-difference polynomial has degree {g.degree}, expected {m * (m - 1) // 2}")
    return g.monic()


def gap_iterate(g: Polynomial, eps_sq: Fraction) -> Fraction:
    """
    One gap step eps^2 - G(eps^2)/G'(eps^2).

    This equals eps^2 + (sum over pairs 1/((p_i - p_j)^2 - eps^2))^{-1}.
    A root of G is returned unchanged.

    Raises:
        DerivativeZeroError: If G' vanishes at eps^2
    """
    eps_sq = Fraction(eps_sq)
    value = g(eps_sq)
    if value == 0:
        return eps_sq
    slope = poly_derivative(g)(eps_sq)
    if slope == 0:
        raise DerivativeZeroError(f"G' vanishes at {eps_sq}")
    return eps_sq - value / slope


def _check_tolerance(tol: Fraction) -> Fraction:
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidInputError(f"tolerance must be positive, got {tol}")
    return tol


def min_gap(
    cp: Polynomial,
    tol: Fraction,
    max_iter: Optional[int] = None,
    max_denominator: Optional[int] = DEFAULT_MAX_DENOMINATOR,
    relative_tol: Optional[Fraction] = None,
) -> GapIteration:
    """
    Increasing certified lower bounds on the minimal gap between distinct roots.

    Starts at eps_0 = 0 and stops once eps^2 grows by less than tol^2, when an
    iterate hits the squared gap exactly, or after max_iter steps.

    Args:
        cp: Monic real-rooted polynomial
        tol: Positive stopping tolerance on the gap
        max_iter: Step limit (defaults to default_max_iter)
        max_denominator: Denominator threshold for downward rounding (None keeps iterates exact)
        relative_tol: Also stop once a step is below this fraction of eps^2

    Raises:
        SingleEigenvalueError: If cp has a single distinct root
    """
    tol = _check_tolerance(tol)
    pm, _ = minimal_polynomial_of(cp)
    m = pm.degree
    if m < 2:
        raise SingleEigenvalueError("minimal gap is undefined for a single distinct root")
    g = squared_difference_poly(pm)
    limit = max_iter if max_iter is not None else default_max_iter(m, tol)
    tol_sq = tol * tol

    eps_sq = [Fraction(0)]
    converged = False
    exact = False
    rounded = False
    for _ in range(limit):
        current = eps_sq[-1]
        if g(current) == 0:
            exact = converged = True
            break
        candidate = gap_iterate(g, current)
        if max_denominator is not None and candidate.denominator > max_denominator:
            lowered = round_down_relative(candidate, max_denominator)
            # a rounded value that does not advance is dropped for the exact one
            if lowered > current:
                candidate = lowered
                rounded = True
        eps_sq.append(candidate)
        logger.debug(f"gap step {len(eps_sq) - 1}: eps^2 = {float(candidate):.12g}")
        step = candidate - current
        if step < tol_sq or (relative_tol is not None and step < relative_tol * candidate):
            converged = True
            break
    if not exact and g(eps_sq[-1]) == 0:
        exact = converged = True
    if eps_sq[-1] == 0:
        converged = False

    result = GapIteration(
        eps_sq=eps_sq,
        converged=converged,
        certified_lower=sqrt_lower(eps_sq[-1]),
        gap_poly=g,
        exact=exact,
        rounded=rounded,
    )
    if not converged:
        logger.warning(f"Gap iteration stopped after {result.iterations} steps without converging")
    logger.info(result.get_summary())
    return result


def initial_outer_bounds(pm: Polynomial) -> Tuple[Fraction, Fraction]:
    """
    Rational (low, high) with low < smallest root and high > largest root.

    Uses mean -/+ ceil(sqrt(D_2)) with D_2 = s_0 s_2 - s_1^2; a single root c
    gets (c - 1, c + 1).
    """
    m = pm.degree
    if m == 1:
        c = -pm.coeffs[0]
        return c - 1, c + 1
    s = power_sums_from_coeffs(pm, 3)
    mean = s[1] / m
    radius = ceil_sqrt(s[0] * s[2] - s[1] * s[1])
    return mean - radius, mean + radius


def extremal_iterate(pm: Polynomial, c: Fraction) -> Fraction:
    """
    One extremal step c - pm(c)/pm'(c), equal to c + (sum 1/(p_i - c))^{-1}.

    Raises:
        DerivativeZeroError: If pm' vanishes at c
    """
    c = Fraction(c)
    value = pm(c)
    if value == 0:
        return c
    slope = poly_derivative(pm)(c)
    if slope == 0:
        raise DerivativeZeroError(f"derivative vanishes at {c}")
    return c - value / slope


def extremal_bound(
    pm: Polynomial,
    side: Side,
    tol: Fraction,
    max_iter: Optional[int] = None,
    max_denominator: Optional[int] = DEFAULT_MAX_DENOMINATOR,
) -> ExtremalIteration:
    """
    Monotone sequence of strict bounds on the smallest or largest root of pm.

    The min side increases toward the smallest root and the max side decreases
    toward the largest. Rounding goes down on the min side and up on the max
    side.
    """
    tol = _check_tolerance(tol)
    side = Side(side)
    limit = max_iter if max_iter is not None else default_max_iter(max(pm.degree, 2), tol)
    low, high = initial_outer_bounds(pm)
    values = [low if side is Side.MIN else high]
    exact_extreme: Optional[Fraction] = None
    converged = False
    rounded = False
    for _ in range(limit):
        current = values[-1]
        candidate = extremal_iterate(pm, current)
        if pm(candidate) == 0:
            exact_extreme = candidate
            converged = True
            break
        if max_denominator is not None and candidate.denominator > max_denominator:
            if side is Side.MIN:
                adjusted = round_down_relative(candidate, max_denominator)
                advances = adjusted > current
            else:
                adjusted = round_up_relative(candidate, max_denominator)
                advances = adjusted < current
            if advances:
                candidate = adjusted
                rounded = True
        values.append(candidate)
        if abs(candidate - current) < tol:
            converged = True
            break

    result = ExtremalIteration(
        side=side,
        values=values,
        certified_bound=values[-1],
        converged=converged,
        exact_extreme=exact_extreme,
        rounded=rounded,
    )
    if not converged:
        logger.warning(f"{side.value}-side extremal iteration stopped after {result.iterations} steps")
    logger.debug(result.get_summary())
    return result
