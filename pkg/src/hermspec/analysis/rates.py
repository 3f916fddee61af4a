"""
Convergence rates of the gap iteration on equidistant spectra.

For roots p_1 + mu*l (l = 0..m-1) the gap iterates scale as mu^2 * w_k^2(m),
where w_k^2 follows a recurrence that depends on m alone. Writing
v_k = 1 - w_k^2, the sequence v_k is squeezed between two geometric rates,
which bounds the number of steps needed to reach a precision delta.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from hermspec.analysis.bounds import DEFAULT_MAX_DENOMINATOR, reciprocal_sum_step
from hermspec.entities.rates import RateReport
from hermspec.exact.exceptions import BadParamsError, SandwichViolationError
from hermspec.exact.polynomial import Polynomial
from hermspec.exact.scalars import ln_interval, round_down_relative, round_up_relative

logger = logging.getLogger('hermspec.analysis.rates')


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 3:
        raise BadParamsError(f"rate analysis needs m >= 3, got {m!r}")


def wgp_poly(m: int, p1: Fraction, mu: Fraction) -> Polynomial:
    """
    prod_{l=0}^{m-1} (x - p1 - mu*l).

    Raises:
        BadParamsError: If m < 3 or mu <= 0
    """
    _check_m(m)
    mu = Fraction(mu)
    if mu <= 0:
        raise BadParamsError(f"gap mu must be positive, got {mu}")
    p1 = Fraction(p1)
    return Polynomial.from_roots(p1 + mu * l for l in range(m))


def w_sq_iterate(m: int, w_sq: Fraction) -> Fraction:
    """
    w^2 + (sum_{l=1}^{m-1} (m-l)/(l^2 - w^2))^{-1}.

    Raises:
        BadParamsError: If m < 3 or w^2 is outside [0, 1)
    """
    _check_m(m)
    w_sq = Fraction(w_sq)
    if not 0 <= w_sq < 1:
        raise BadParamsError(f"w^2 must lie in [0, 1), got {w_sq}")
    return reciprocal_sum_step([l * l for l in range(1, m)], w_sq, [m - l for l in range(1, m)])


def w_sq_sequence(m: int, steps: int) -> List[Fraction]:
    """Exact w_0^2 = 0, w_1^2, ..., w_steps^2."""
    values = [Fraction(0)]
    for _ in range(steps):
        values.append(w_sq_iterate(m, values[-1]))
    return values


def B_of_m(m: int) -> Fraction:
    """
    sum_{l=2}^{m-1} ((m-l)/(m-1)) / (l^2 - 1), checked against the harmonic closed form.

    Raises:
        BadParamsError: If m < 3
    """
    _check_m(m)
    total = sum((Fraction(m - l, (m - 1) * (l * l - 1)) for l in range(2, m)), Fraction(0))
    closed = B_closed_form(m)
    if total != closed:
        raise BadParamsError(f"B({m}) sum {total} disagrees with closed form {closed}")
    return total


def B_closed_form(m: int) -> Fraction:
    """(3m/4 - 1/4 + 1/(2m) - H_m) / (m - 1), H_m the m-th harmonic number."""
    _check_m(m)
    harmonic = sum((Fraction(1, l) for l in range(1, m + 1)), Fraction(0))
    return (Fraction(3 * m, 4) - Fraction(1, 4) + Fraction(1, 2 * m) - harmonic) / (m - 1)


def A_of_m(m: int) -> Fraction:
    """(m-1) / ((m-1)^2 + m(m-2) B(m))."""
    _check_m(m)
    return Fraction(m - 1) / ((m - 1) ** 2 + m * (m - 2) * B_of_m(m))


def v_step(m: int, v: Fraction) -> Fraction:
    """v - {(m-1)/v + sum_{l=2}^{m-1} (m-l)/(l^2-1+v)}^{-1}."""
    bracket = Fraction(m - 1) / v + sum((Fraction(m - l) / (l * l - 1 + v) for l in range(2, m)), Fraction(0))
    return v - 1 / bracket


def iteration_window(m: int, delta: Fraction) -> Tuple[int, int]:
    """
    Outward-rounded (k_min, k_max) for reaching v_k < delta.

    k_min comes from the lower rate (m-2)/(m-1) and k_max from 1 - A(m); both
    logarithms are replaced by rational enclosures.
    """
    _check_m(m)
    target_lo, target_hi = ln_interval(1 / Fraction(delta))
    _, fast_hi = ln_interval(Fraction(m - 1, m - 2))
    slow_lo, _ = ln_interval(1 / (1 - A_of_m(m)))
    k_min = math.ceil(target_lo / fast_hi)
    k_max = math.floor(target_hi / slow_lo) + 1
    return k_min, k_max


def rate_report(
    m: int,
    delta: Fraction,
    steps: int,
    max_denominator: Optional[int] = DEFAULT_MAX_DENOMINATOR,
    strict: bool = False,
) -> RateReport:
    """
    Run the v recurrence, check the geometric sandwich and predict step counts.

    The recurrence map is nondecreasing in v, so rounding the upper track up
    and the lower track down keeps v_k bracketed. A sandwich branch is
    violated only when the whole bracket lies on the wrong side; a bracket
    that straddles the bound is reported as undecided. The iteration runs
    past `steps` until v_k < delta is certified or k_max is exceeded.

    Args:
        m: Number of equidistant roots (>= 3)
        delta: Target precision, 0 < delta < 1
        steps: Number of v_k entries to keep in the trace
        max_denominator: Rounding threshold (None keeps every step exact)
        strict: Raise on a certified sandwich violation instead of recording it

    Raises:
        BadParamsError: If the parameters are out of range
        SandwichViolationError: In strict mode, on a certified violation
    """
    _check_m(m)
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise BadParamsError(f"delta must lie in (0, 1), got {delta}")
    if steps < 0:
        raise BadParamsError(f"steps must be nonnegative, got {steps}")
    B = B_of_m(m)
    A = A_of_m(m)
    lower_geo = Fraction(m - 2, m - 1)
    upper_geo = 1 - A
    k_min, k_max = iteration_window(m, delta)

    hi = lo = Fraction(1)
    v_upper, v_lower = [hi], [lo]
    exact_steps = 0
    observed_k: Optional[int] = None
    violations: List[int] = []
    undecided: List[int] = []
    lower_power = upper_power = Fraction(1)
    k = 0
    while k < steps or (observed_k is None and k <= k_max):
        k += 1
        hi, lo = v_step(m, hi), v_step(m, lo)
        if max_denominator is not None:
            if hi.denominator > max_denominator:
                hi = round_up_relative(hi, max_denominator)
            if lo.denominator > max_denominator:
                lo = round_down_relative(lo, max_denominator)
        if hi == lo and exact_steps == k - 1:
            exact_steps = k
        if lo <= 0:
            logger.warning(f"lower track of v_k underflowed at k={k}; stopping")
            break
        lower_power *= lower_geo
        upper_power *= upper_geo
        lower_ok = lower_power < lo
        upper_ok = hi <= upper_power
        if hi <= lower_power or lo > upper_power:
            violations.append(k)
            logger.warning(f"rate sandwich violated for m={m} at k={k}")
            if strict:
                raise SandwichViolationError(f"v_{k}({m}) lies outside its geometric bounds", {'k': k, 'm': m})
        elif not (lower_ok and upper_ok):
            undecided.append(k)
        if observed_k is None and hi < delta:
            observed_k = k
        if k <= steps:
            v_upper.append(hi)
            v_lower.append(lo)

    report = RateReport(
        m=m,
        B=B,
        A=A,
        v_upper=v_upper,
        v_lower=v_lower,
        exact_steps=exact_steps,
        lower_geo=lower_geo,
        upper_geo=upper_geo,
        delta=delta,
        k_min=k_min,
        k_max=k_max,
        observed_k=observed_k,
        sandwich_violations=violations,
        sandwich_undecided=undecided,
    )
    logger.info(report.get_summary())
    return report


def monotone_in_m_check(m: int, k: int) -> bool:
    """
    Whether w_k^2(m+1) < w_k^2(m), computed exactly.

    Raises:
        BadParamsError: If m < 3 or k < 1
    """
    _check_m(m)
    if k < 1:
        raise BadParamsError(f"k must be at least 1, got {k}")
    return w_sq_sequence(m + 1, k)[-1] < w_sq_sequence(m, k)[-1]
