"""
Orbit classes of Hermitian matrices.

Two matrices lie in the same unitary orbit when their first 2m traces agree.
The coarser orbit class is the sequence of multiplicities read in ascending
eigenvalue order. It is recovered without computing any eigenvalue: a
lattice with step below the certified minimal gap puts every distinct root in
its own cell, and sign tests of each same-multiplicity factor at the lattice
sites say which cells hold which multiplicity.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Set

from hermspec.analysis.bounds import DEFAULT_MAX_DENOMINATOR, extremal_bound, min_gap
from hermspec.analysis.hankel import hankel_ladder, hankel_sequence, variations_at
from hermspec.analysis.moments import power_sums_from_coeffs
from hermspec.analysis.spectrum import multiplicity_spectrum
from hermspec.entities.iterations import GapIteration, Side
from hermspec.entities.moments import MomentSeq
from hermspec.entities.orbit import Lattice, OrbitComparison, OrbitSignature
from hermspec.entities.spectrum import MultiplicitySpectrum
from hermspec.exact.exceptions import (
    DegenerateGapError,
    InconsistencyError,
    InsufficientMomentsError,
    InvalidInputError,
    RootOnOriginBoundaryError,
)
from hermspec.exact.polynomial import Polynomial
from hermspec.exact.scalars import round_down

logger = logging.getLogger('hermspec.analysis.orbits')

DEFAULT_LATTICE_RELATIVE_STEP = Fraction(1, 16)


def simplify_step(step: Fraction, slack: Fraction = DEFAULT_LATTICE_RELATIVE_STEP) -> Fraction:
    """Coarsest dyadic d with step * (1 - slack) <= d <= step."""
    floor_value = step * (1 - slack)
    bits = 0
    while True:
        candidate = round_down(step, 1 << bits)
        if candidate >= floor_value and candidate > 0:
            return candidate
        bits += 1


def build_lattice(
    spectrum: MultiplicitySpectrum,
    gap: GapIteration,
    lowb: Fraction,
    highb: Fraction,
    slack: Fraction = DEFAULT_LATTICE_RELATIVE_STEP,
) -> Lattice:
    """
    Lattice from lowb with step at most the certified gap, covering past highb.

    Raises:
        DegenerateGapError: If there is a single distinct root
        InvalidInputError: If the gap bound is not positive or lowb >= highb
    """
    if spectrum.m == 1:
        raise DegenerateGapError(
            "a single distinct root needs no lattice",
            {'ordered_multiplicities': [spectrum.n]},
        )
    if gap.certified_lower <= 0:
        raise InvalidInputError(f"lattice step needs a positive gap bound, got {gap.certified_lower}")
    lowb, highb = Fraction(lowb), Fraction(highb)
    if lowb >= highb:
        raise InvalidInputError(f"lattice bracket must satisfy lowb < highb, got {lowb}, {highb}")
    step = simplify_step(gap.certified_lower, slack)
    count = math.floor((highb - lowb) / step + 1)
    lattice = Lattice(origin=lowb, step=step, M=count)
    logger.debug(f"Lattice origin {lowb}, step {step}, {count} cells")
    return lattice


def occupancy_set(factor: Polynomial, lattice: Lattice) -> Set[int]:
    """
    Cells ]x_{j-1}, x_j] that contain a root of the square-free factor.

    A root sitting exactly on a site x_j belongs to cell j. With the lattice
    step below the root gap every cell holds at most one root, so this is the
    set of cells where the factor changes sign or vanishes at the right end.
    The cells are found by bisecting the site range on root counts from the
    factor's Hankel sign variations, which costs O(log M) evaluations per
    root instead of one per site.

    Raises:
        RootOnOriginBoundaryError: If the factor vanishes at the origin
        InconsistencyError: If one cell holds more than one root
    """
    if factor(lattice.origin) == 0:
        raise RootOnOriginBoundaryError(f"factor {factor} vanishes at the lattice origin {lattice.origin}")
    d = factor.degree
    if d == 0:
        return set()
    polys = hankel_sequence(power_sums_from_coeffs(factor.monic(), 2 * d), d)
    variations: Dict[int, int] = {}

    def at(j: int) -> int:
        if j not in variations:
            variations[j] = variations_at(polys, lattice.site(j))
        return variations[j]

    occupied: Set[int] = set()
    pending = [(0, lattice.M)]
    while pending:
        a, b = pending.pop()
        count = at(a) - at(b)
        if count == 0:
            continue
        if b - a == 1:
            if count > 1:
                raise InconsistencyError(
                    f"cell {b} holds {count} roots; lattice step {lattice.step} exceeds the root gap",
                    {'cell': b, 'count': count},
                )
            occupied.add(b)
            continue
        c = (a + b) // 2
        pending.append((a, c))
        pending.append((c, b))
    return occupied


def class_signature(
    cp: Polynomial,
    relative_step: Fraction = DEFAULT_LATTICE_RELATIVE_STEP,
    max_denominator: Optional[int] = DEFAULT_MAX_DENOMINATOR,
) -> OrbitSignature:
    """
    Multiplicities of cp's roots in ascending root order.

    Runs the factorization, a coarse gap bound, outer bounds on the extreme
    roots, the lattice and one occupancy scan per multiplicity class.

    Raises:
        InconsistencyError: If the occupancy does not account for every root exactly once
    """
    spectrum = multiplicity_spectrum(cp)
    if spectrum.m == 1:
        return OrbitSignature(ordered_multiplicities=[spectrum.n])

    gap = min_gap(cp, tol=Fraction(1, 10 ** 6), max_denominator=max_denominator, relative_tol=relative_step)
    coarse = gap.certified_lower / 4
    low = extremal_bound(spectrum.min_poly, Side.MIN, coarse, max_denominator=max_denominator)
    high = extremal_bound(spectrum.min_poly, Side.MAX, coarse, max_denominator=max_denominator)
    lattice = build_lattice(spectrum, gap, low.certified_bound, high.certified_bound, relative_step)

    occupancy: Dict[int, Set[int]] = {}
    cell_owner: Dict[int, int] = {}
    for group in spectrum.groups:
        cells = occupancy_set(group.factor, lattice)
        if len(cells) != group.n:
            raise InconsistencyError(
                f"factor for multiplicity {group.q} occupies {len(cells)} cells, expected {group.n}",
                {'q': group.q, 'cells': sorted(cells)},
            )
        for cell in cells:
            if cell in cell_owner:
                raise InconsistencyError(f"cell {cell} claimed by multiplicities {cell_owner[cell]} and {group.q}")
            cell_owner[cell] = group.q
        occupancy[group.q] = cells

    ordered = [cell_owner[cell] for cell in sorted(cell_owner)]
    signature = OrbitSignature(ordered_multiplicities=ordered, occupancy=occupancy, lattice=lattice)
    logger.info(f"Orbit {signature.get_summary()}")
    return signature


def _distinct_count(t: MomentSeq) -> int:
    n = t.source_degree
    usable = min(n, (len(t) + 1) // 2)
    ladder = hankel_ladder(t, usable)
    if ladder.m == usable and usable < n:
        raise InsufficientMomentsError(
            f"{len(t)} moments cannot settle the distinct-root count of a degree-{n} input"
        )
    return ladder.m


def orbit_trace_count(tP: MomentSeq, tQ: MomentSeq) -> int:
    """
    Number of leading traces that decide unitary equivalence: 2m.

    m is the larger distinct-root count of the two inputs.

    Raises:
        InsufficientMomentsError: If either sequence is shorter than 2m
    """
    m = max(_distinct_count(tP), _distinct_count(tQ))
    needed = 2 * m
    if len(tP) < needed or len(tQ) < needed:
        raise InsufficientMomentsError(
            f"orbit comparison needs {needed} traces, got {len(tP)} and {len(tQ)}"
        )
    return needed


def same_orbit(tP: MomentSeq, tQ: MomentSeq) -> bool:
    """True iff t_k(P) = t_k(Q) for k = 0..2m-1."""
    needed = orbit_trace_count(tP, tQ)
    return tP.values[:needed] == tQ.values[:needed]


def same_class(cpP: Polynomial, cpQ: Polynomial) -> bool:
    """True iff both inputs have the same ordered multiplicity sequence."""
    return class_signature(cpP).ordered_multiplicities == class_signature(cpQ).ordered_multiplicities


def compare(tP: MomentSeq, cpP: Polynomial, tQ: MomentSeq, cpQ: Polynomial) -> OrbitComparison:
    """Orbit and class verdicts for two inputs, with the evidence for both."""
    needed = orbit_trace_count(tP, tQ)
    first = class_signature(cpP)
    second = class_signature(cpQ)
    orbit = tP.values[:needed] == tQ.values[:needed]
    return OrbitComparison(
        same_orbit=orbit,
        same_class=first.ordered_multiplicities == second.ordered_multiplicities,
        compared_traces=needed,
        first_traces=list(tP.values[:needed]),
        second_traces=list(tQ.values[:needed]),
        first_signature=first,
        second_signature=second,
    )
