"""
Moment sequences: power sums, elementary symmetric functions and matrix traces.

Power sums of a monic polynomial come from Newton's identities; the inverse
identities recover the coefficients from the power sums. Traces of powers of a
Hermitian matrix are the same invariants computed from the matrix side.
"""

import logging
from fractions import Fraction
from typing import List

from hermspec.entities.moments import HermitianInput, MomentSeq
from hermspec.exact.exceptions import InconsistencyError, LengthMismatchError, NotMonicError
from hermspec.exact.polynomial import Polynomial
from hermspec.exact.scalars import ComplexExact

logger = logging.getLogger('hermspec.analysis.moments')


def power_sums_from_coeffs(p: Polynomial, count: int) -> MomentSeq:
    """
    Power sums t_0..t_{count-1} of the roots of p, counted with multiplicity.

    Args:
        p: Monic polynomial
        count: Number of moments to produce

    Returns:
        MomentSeq with source_degree = deg p

    Raises:
        NotMonicError: If p is not monic
    """
    if not p.is_monic:
        raise NotMonicError(f"power sums need a monic polynomial, leading coefficient is {p.leading}")
    n = p.degree
    a = p.coeffs
    t: List[Fraction] = [Fraction(n)]
    for k in range(1, count):
        if k <= n:
            total = -k * a[n - k]
            for j in range(1, k):
                total -= a[n - j] * t[k - j]
        else:
            total = Fraction(0)
            for j in range(1, n + 1):
                total -= a[n - j] * t[k - j]
        t.append(total)
    return MomentSeq(tuple(t[:count]), n)


def elementary_from_power_sums(s: MomentSeq, m: int) -> List[Fraction]:
    """
    Elementary symmetric functions e_1..e_m from power sums s_0..s_m.

    Raises:
        LengthMismatchError: If fewer than m + 1 values are given or s_0 != m
    """
    if len(s) < m + 1:
        raise LengthMismatchError(f"need {m + 1} power sums for degree {m}, got {len(s)}")
    if s[0] != m:
        raise LengthMismatchError(f"s_0 = {s[0]} does not match degree {m}")
    e = [Fraction(1)]
    for k in range(1, m + 1):
        total = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * s[i]
            total += term if i % 2 == 1 else -term
        e.append(total / k)
    return e[1:]


def charpoly_from_traces(t: MomentSeq, n: int) -> Polynomial:
    """Monic degree-n polynomial whose power sums are t."""
    sigma = elementary_from_power_sums(t, n)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    for k, value in enumerate(sigma, start=1):
        coeffs[n - k] = value if k % 2 == 0 else -value
    return Polynomial(coeffs)


def _mat_mul(a: List[List[ComplexExact]], b: List[List[ComplexExact]]) -> List[List[ComplexExact]]:
    size = len(a)
    zero = ComplexExact()
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = zero
            for k in range(size):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def traces_from_matrix(h: HermitianInput, count: int) -> MomentSeq:
    """
    Exact traces of H^0..H^{count-1}.

    Raises:
        InconsistencyError: If a trace keeps a nonzero imaginary part
    """
    size = h.size
    values: List[Fraction] = [Fraction(size)]
    base = h.to_lists()
    power = base
    for k in range(1, count):
        trace = ComplexExact()
        for i in range(size):
            trace = trace + power[i][i]
        if not trace.is_real:
            raise InconsistencyError(f"trace of H^{k} has imaginary part {trace.im}")
        values.append(trace.re)
        if k + 1 < count:
            power = _mat_mul(power, base)
    logger.debug(f"Computed {count} traces of a {size}x{size} Hermitian matrix")
    return MomentSeq(tuple(values[:count]), size)


def charpoly_of_matrix(h: HermitianInput) -> Polynomial:
    """Characteristic polynomial det(xI - H) via traces and Newton's identities."""
    return charpoly_from_traces(traces_from_matrix(h, h.size + 1), h.size)
