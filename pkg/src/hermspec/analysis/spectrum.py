"""
Minimal polynomial, multiplicities and same-multiplicity factorization.

Everything here is a rational function of the moments. The minimal polynomial
is the normalized Hankel polynomial of order m. A multiplicity class q is
detected by deflating the moments against the minimal polynomial's power sums
(weights r_i - q vanish exactly on the class) and reading the rank drop of the
order-m Hankel matrix.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from hermspec.analysis.hankel import build_hankel, hankel_ladder, hankel_polynomial_coeffs
from hermspec.analysis.moments import power_sums_from_coeffs
from hermspec.entities.ladder import HankelLadder
from hermspec.entities.moments import MomentSeq
from hermspec.entities.spectrum import MultiplicityGroup, MultiplicitySpectrum, SyzygyClass, SyzygyReport
from hermspec.exact.exceptions import (
    LengthMismatchError,
    NonIntegerMultiplicityError,
    NotARootError,
    NotMonicError,
    NotRealRootedError,
    ReconstructionFailureError,
    SingularHankelError,
    SyzygyViolationError,
)
from hermspec.exact.matrix import det_exact, rank_exact, solve_exact
from hermspec.exact.polynomial import Polynomial, poly_div_exact

logger = logging.getLogger('hermspec.analysis.spectrum')


def minimal_polynomial(t: MomentSeq, m: int) -> Polynomial:
    """
    Monic polynomial whose roots are the m distinct roots behind t.

    Raises:
        SingularHankelError: If D_m vanishes
    """
    h = hankel_polynomial_coeffs(t, m)
    if h.leading == 0 or h.degree != m:
        raise SingularHankelError(f"D_{m} = 0 although the ladder reports {m} distinct roots")
    return h.monic()


def minimal_polynomial_of(cp: Polynomial) -> Tuple[Polynomial, HankelLadder]:
    """
    Minimal polynomial of a real-rooted monic polynomial, with its ladder.

    Raises:
        NotMonicError: If cp is not monic
        NotRealRootedError: If the Hankel ladder rules out real roots
    """
    if not cp.is_monic:
        raise NotMonicError(f"characteristic polynomial must be monic, leading coefficient is {cp.leading}")
    n = cp.degree
    t = power_sums_from_coeffs(cp, 2 * n)
    ladder = hankel_ladder(t, n)
    if not ladder.valid_real:
        raise NotRealRootedError(
            f"polynomial is not real-rooted: D_{ladder.offending_index} breaks the positive pattern",
            {'offending_index': ladder.offending_index, 'dets': [str(d) for d in ladder.dets]},
        )
    return minimal_polynomial(t, ladder.m), ladder


def hankel_pairing(t: MomentSeq, m: int, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """Scalar product u . H_m^{-1} . v^T."""
    y = solve_exact(build_hankel(t, m), list(v))
    return sum((a * b for a, b in zip(u, y)), Fraction(0))


def power_vector(p: Fraction, m: int) -> List[Fraction]:
    """(1, p, ..., p^{m-1})."""
    p = Fraction(p)
    return [p ** k for k in range(m)]


def multiplicity_of_root(t: MomentSeq, m: int, p: Fraction) -> int:
    """
    Multiplicity of root p as 1 / (p_vec . H_m^{-1} . p_vec^T).

    Raises:
        NotARootError: If p is not a root of the minimal polynomial
        NonIntegerMultiplicityError: If the formula does not yield a positive integer
    """
    p = Fraction(p)
    if minimal_polynomial(t, m)(p) != 0:
        raise NotARootError(f"{p} is not a root of the minimal polynomial")
    vec = power_vector(p, m)
    pairing = hankel_pairing(t, m, vec, vec)
    if pairing == 0:
        raise NonIntegerMultiplicityError(f"zero pairing at root {p}")
    r = 1 / pairing
    if r.denominator != 1 or r <= 0:
        raise NonIntegerMultiplicityError(f"multiplicity of {p} evaluates to {r}", {'value': str(r)})
    return int(r)


def deflated_moments(t: MomentSeq, s: MomentSeq, q: int) -> MomentSeq:
    """
    Moments t_k - q * s_k, whose weights r_i - q vanish on the class of multiplicity q.

    Raises:
        LengthMismatchError: If t and s have different lengths
    """
    if len(t) != len(s):
        raise LengthMismatchError(f"cannot deflate {len(t)} moments against {len(s)} power sums")
    return MomentSeq(tuple(a - q * b for a, b in zip(t, s)), s.source_degree)


def _class_factor(pm: Polynomial, tq: MomentSeq, m: int, n_q: int, q: int) -> Polynomial:
    if n_q == m:
        return pm
    auxiliary = hankel_polynomial_coeffs(tq, m - n_q)
    if auxiliary.leading == 0 or auxiliary.degree != m - n_q:
        raise SingularHankelError(f"auxiliary polynomial for multiplicity {q} has a singular leading block")
    factor = poly_div_exact(pm, auxiliary.monic())
    if factor.degree != n_q:
        raise ReconstructionFailureError(f"factor for multiplicity {q} has degree {factor.degree}, expected {n_q}")
    return factor


def multiplicity_spectrum(cp: Polynomial) -> MultiplicitySpectrum:
    """
    Factor cp into prod Q_alpha^{q_alpha} over its multiplicity classes.

    Candidate multiplicities q = 1..n-m+1 are scanned in ascending order until
    every distinct root is accounted for.

    Raises:
        NotMonicError: If cp is not monic
        NotRealRootedError: If the Hankel ladder rules out real roots
        ReconstructionFailureError: If the partitions or the product check fail
    """
    pm, ladder = minimal_polynomial_of(cp)
    n = cp.degree
    m = ladder.m
    t = power_sums_from_coeffs(cp, 2 * m)
    s = power_sums_from_coeffs(pm, 2 * m)

    groups: List[MultiplicityGroup] = []
    found = 0
    for q in range(1, n - m + 2):
        tq = deflated_moments(t, s, q)
        n_q = m - rank_exact(build_hankel(tq, m))
        if n_q == 0:
            continue
        factor = _class_factor(pm, tq, m, n_q, q)
        logger.debug(f"multiplicity {q}: {n_q} root(s), factor {factor}")
        groups.append(MultiplicityGroup(q=q, n=n_q, factor=factor))
        found += n_q
        if found >= m:
            break

    spectrum = MultiplicitySpectrum(n=n, m=m, groups=groups, min_poly=pm)
    _validate_spectrum(cp, spectrum)
    logger.info(f"Factored degree-{n} polynomial: {spectrum.get_summary()}")
    return spectrum


def _validate_spectrum(cp: Polynomial, spectrum: MultiplicitySpectrum) -> None:
    total_roots = sum(g.n for g in spectrum.groups)
    total_degree = sum(g.n * g.q for g in spectrum.groups)
    if total_roots != spectrum.m or total_degree != spectrum.n:
        raise ReconstructionFailureError(
            f"partition check failed: sum n = {total_roots} (want {spectrum.m}), "
            f"sum n*q = {total_degree} (want {spectrum.n})"
        )
    product = Polynomial.constant(1)
    for group in spectrum.groups:
        product = product * group.factor ** group.q
    if product != cp:
        raise ReconstructionFailureError(f"product of factors {product} differs from {cp}")


def syzygy_check(cp: Polynomial, spectrum: MultiplicitySpectrum) -> SyzygyReport:
    """
    Verify the vanishing Hankel determinants of every deflated sequence.

    For a class with n roots of multiplicity q, det H_k(t^(q)) vanishes for
    k = m-n+1..m and not for k = m-n. Eliminating q leaves n - 1 relations per
    class, m - l in total.

    Raises:
        SyzygyViolationError: If a determinant does not behave as required
    """
    m = spectrum.m
    t = power_sums_from_coeffs(cp, 2 * m)
    s = power_sums_from_coeffs(spectrum.min_poly, 2 * m)
    classes = []
    for group in spectrum.groups:
        tq = deflated_moments(t, s, group.q)
        vanishing = list(range(m - group.n + 1, m + 1))
        for k in vanishing:
            d = det_exact(build_hankel(tq, k))
            if d != 0:
                raise SyzygyViolationError(
                    f"det H_{k} of moments deflated by {group.q} is {d}, expected 0",
                    {'q': group.q, 'order': k},
                )
        base_order = m - group.n
        base_det = det_exact(build_hankel(tq, base_order))
        if base_det == 0:
            raise SyzygyViolationError(
                f"det H_{base_order} of moments deflated by {group.q} vanishes",
                {'q': group.q, 'order': base_order},
            )
        classes.append(SyzygyClass(
            q=group.q,
            n=group.n,
            vanishing_orders=vanishing,
            nonvanishing_order=base_order,
            nonvanishing_det=base_det,
        ))
    report = SyzygyReport(m=m, classes=classes)
    if report.count != m - spectrum.l:
        raise SyzygyViolationError(f"found {report.count} syzygies, expected {m - spectrum.l}")
    return report
