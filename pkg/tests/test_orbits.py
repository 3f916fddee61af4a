"""
Tests for orbit classes, lattice occupancy and orbit comparison.
"""

import random
from fractions import Fraction

import pytest

from conftest import charpoly, random_corpus
from hermspec.analysis.bounds import min_gap
from hermspec.analysis.moments import charpoly_of_matrix, power_sums_from_coeffs, traces_from_matrix
from hermspec.analysis.orbits import (
    build_lattice,
    class_signature,
    compare,
    occupancy_set,
    orbit_trace_count,
    same_class,
    same_orbit,
    simplify_step,
)
from hermspec.analysis.spectrum import multiplicity_spectrum
from hermspec.entities.moments import HermitianInput, MomentSeq
from hermspec.entities.orbit import Lattice, OrbitComparison, OrbitSignature
from hermspec.exact.exceptions import (
    DegenerateGapError,
    InsufficientMomentsError,
    InvalidInputError,
    RootOnOriginBoundaryError,
)
from hermspec.exact.polynomial import Polynomial
from hermspec.exact.scalars import ComplexExact


def moments(cp: Polynomial) -> MomentSeq:
    return power_sums_from_coeffs(cp, 2 * cp.degree)


def test_class_signature_small_cases(double_then_single, three_simple):
    assert class_signature(double_then_single).ordered_multiplicities == [2, 1]
    assert class_signature(Polynomial.from_spectrum([(1, 1), (2, 2)])).ordered_multiplicities == [1, 2]
    assert class_signature(Polynomial.from_spectrum([(3, 4)])).ordered_multiplicities == [4]
    assert class_signature(three_simple).ordered_multiplicities == [1, 1, 1]


def test_single_eigenvalue_has_no_lattice():
    signature = class_signature(Polynomial.from_spectrum([(Fraction(-1, 2), 3)]))
    assert signature.lattice is None
    assert signature.to_dict() == {'ordered_multiplicities': [3], 'occupancy': {}, 'lattice': None}


@pytest.mark.slow
def test_class_signature_recovers_random_spectra():
    for spectrum in random_corpus(seed=58, size=30, max_m=5):
        signature = class_signature(charpoly(spectrum))
        assert signature.ordered_multiplicities == [r for _, r in spectrum]


def test_class_signature_occupancy_evidence(double_then_single):
    signature = class_signature(double_then_single)
    lattice = signature.lattice
    assert lattice is not None
    assert lattice.origin < 1 and lattice.end > 2
    (cell_double,) = signature.occupancy[2]
    (cell_single,) = signature.occupancy[1]
    assert cell_double < cell_single
    assert lattice.site(cell_double - 1) < 1 <= lattice.site(cell_double)


def test_simplify_step_is_dyadic_and_within_slack():
    assert simplify_step(Fraction(1)) == 1
    assert simplify_step(Fraction(7, 10)) == Fraction(11, 16)
    for step in (Fraction(1, 3), Fraction(22, 7), Fraction(5, 1001)):
        d = simplify_step(step)
        assert d.denominator & (d.denominator - 1) == 0
        assert step * Fraction(15, 16) <= d <= step


def test_occupancy_counts_root_on_site_once():
    lattice = Lattice(origin=Fraction(0), step=Fraction(1, 2), M=4)
    assert occupancy_set(Polynomial([-1, 1]), lattice) == {2}
    assert occupancy_set(Polynomial([Fraction(-3, 4), 1]), lattice) == {2}
    assert occupancy_set(Polynomial.from_roots([Fraction(1, 4), Fraction(7, 4)]), lattice) == {1, 4}


def test_occupancy_rejects_root_on_origin():
    with pytest.raises(RootOnOriginBoundaryError):
        occupancy_set(Polynomial([0, 1]), Lattice(Fraction(0), Fraction(1, 2), 4))


def test_build_lattice_covers_bracket(three_simple):
    spectrum = multiplicity_spectrum(three_simple)
    gap = min_gap(three_simple, Fraction(1, 100))
    lattice = build_lattice(spectrum, gap, Fraction(-1), Fraction(4))
    assert lattice.step <= gap.certified_lower
    assert lattice.end > 4
    with pytest.raises(InvalidInputError):
        build_lattice(spectrum, gap, Fraction(4), Fraction(-1))


def test_build_lattice_rejects_single_root(three_simple):
    gap = min_gap(three_simple, Fraction(1, 100))
    with pytest.raises(DegenerateGapError) as info:
        build_lattice(multiplicity_spectrum(Polynomial.from_spectrum([(3, 4)])), gap, Fraction(0), Fraction(4))
    assert info.value.details['ordered_multiplicities'] == [4]


def test_same_orbit(double_then_single):
    t = moments(double_then_single)
    assert same_orbit(t, t)
    assert not same_orbit(t, moments(Polynomial.from_spectrum([(1, 1), (2, 2)])))
    assert not same_orbit(t, moments(Polynomial.from_spectrum([(1, 2), (3, 1)])))


def test_same_class(double_then_single):
    assert same_class(double_then_single, Polynomial.from_spectrum([(1, 2), (3, 1)]))
    assert same_class(double_then_single, Polynomial.from_spectrum([(-10, 2), (Fraction(1, 3), 1)]))
    assert not same_class(double_then_single, Polynomial.from_spectrum([(1, 1), (2, 2)]))


def test_orbit_trace_count(double_then_single, three_simple):
    assert orbit_trace_count(moments(double_then_single), moments(double_then_single)) == 4
    assert orbit_trace_count(moments(double_then_single), moments(three_simple)) == 6


def test_orbit_trace_count_needs_enough_traces(double_then_single):
    short = MomentSeq(moments(double_then_single).values[:2], 3)
    with pytest.raises(InsufficientMomentsError):
        orbit_trace_count(short, moments(double_then_single))


def test_compare_reports_both_verdicts(double_then_single):
    other = Polynomial.from_spectrum([(1, 2), (3, 1)])
    result = compare(moments(double_then_single), double_then_single, moments(other), other)
    assert not result.same_orbit
    assert result.same_class
    assert result.compared_traces == 4
    assert result.first_traces == [3, 4, 6, 10]
    assert result.get_summary() == "different orbits, same class"
    restored = OrbitComparison.from_dict(result.to_dict())
    assert restored.first_signature.ordered_multiplicities == [2, 1]
    assert restored.second_traces == result.second_traces


def test_signature_round_trips_through_dict(three_simple):
    signature = class_signature(three_simple)
    restored = OrbitSignature.from_dict(signature.to_dict())
    assert restored == signature


def _near_miss(spectrum):
    """Same eigenvalue count, one multiplicity or one eigenvalue moved."""
    roots = [p for p, _ in spectrum]
    mults = [r for _, r in spectrum]
    for i in range(len(mults)):
        for j in range(i + 1, len(mults)):
            if mults[i] != mults[j]:
                mults[i], mults[j] = mults[j], mults[i]
                return list(zip(roots, mults))
    roots[-1] += 1
    return list(zip(roots, mults))


@pytest.mark.slow
def test_same_orbit_rejects_near_misses():
    for spectrum in random_corpus(seed=73, size=100, min_m=2, max_m=4):
        t = moments(charpoly(spectrum))
        other = moments(charpoly(_near_miss(spectrum)))
        assert same_orbit(t, t)
        assert not same_orbit(t, other)
        assert not same_orbit(other, t)


@pytest.mark.slow
def test_same_class_is_an_equivalence():
    rng = random.Random(67)
    patterns = [(2, 1), (1, 2), (1, 1), (2, 1, 1)]
    pool = []
    for _ in range(8):
        pattern = rng.choice(patterns)
        roots = sorted(rng.sample(range(-6, 7), len(pattern)))
        pool.append(Polynomial.from_spectrum(list(zip(roots, pattern))))
    signatures = [class_signature(cp).ordered_multiplicities for cp in pool]
    related = [[same_class(a, b) for b in pool] for a in pool]
    size = len(pool)
    for i in range(size):
        assert related[i][i]
        for j in range(size):
            assert related[i][j] == related[j][i]
            assert related[i][j] == (signatures[i] == signatures[j])
            for k in range(size):
                if related[i][j] and related[j][k]:
                    assert related[i][k]
    assert any(related[i][j] for i in range(size) for j in range(size) if i != j)


def _conjugated_diagonal(values):
    """U diag(values) U* for U = diag(omega, 1, ..) R with rational rotation R and |omega| = 1."""
    size = len(values)
    unitary = [[ComplexExact(1 if i == j else 0) for j in range(size)] for i in range(size)]
    c, s = Fraction(3, 5), Fraction(4, 5)
    last = size - 1
    unitary[0][0], unitary[0][last] = ComplexExact(c), ComplexExact(-s)
    unitary[last][0], unitary[last][last] = ComplexExact(s), ComplexExact(c)
    omega = ComplexExact(Fraction(3, 5), Fraction(4, 5))
    unitary[0] = [omega * u for u in unitary[0]]
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = ComplexExact()
            for k in range(size):
                acc = acc + unitary[i][k] * ComplexExact(values[k]) * unitary[j][k].conjugate()
            row.append(acc)
        rows.append(row)
    return HermitianInput.from_rows(rows)


def test_same_orbit_implies_same_class():
    for spectrum in ([(1, 2), (2, 1)], [(-3, 1), (0, 2), (Fraction(5, 2), 1)], [(4, 1), (7, 3)]):
        values = [p for p, r in spectrum for _ in range(r)]
        cp = charpoly(spectrum)
        h = _conjugated_diagonal(values)
        assert any(h.entries[i][j] != ComplexExact() for i in range(h.size) for j in range(h.size) if i != j)
        assert same_orbit(moments(cp), traces_from_matrix(h, 2 * cp.degree))
        assert charpoly_of_matrix(h) == cp
        assert same_class(cp, charpoly_of_matrix(h))


@pytest.mark.slow
def test_signature_survives_lattice_refinement():
    for spectrum in random_corpus(seed=79, size=15, min_m=2, max_m=4):
        cp = charpoly(spectrum)
        signature = class_signature(cp)
        lattice = signature.lattice
        finer = Lattice(
            origin=lattice.origin - 1,
            step=lattice.step / 2,
            M=2 * lattice.M + 4 * (-(-1 // lattice.step)) + 4,
        )
        assert finer.end > lattice.end + 1
        owner = {}
        for group in multiplicity_spectrum(cp).groups:
            for cell in occupancy_set(group.factor, finer):
                assert cell not in owner
                owner[cell] = group.q
        assert [owner[cell] for cell in sorted(owner)] == signature.ordered_multiplicities


def test_class_signature_separates_a_pair_below_the_rounding_grid():
    cp = Polynomial.from_spectrum([(0, 2), (Fraction(1, 10 ** 20), 1), (1, 1)])
    signature = class_signature(cp)
    assert signature.ordered_multiplicities == [2, 1, 1]
    assert signature.lattice.step <= Fraction(1, 10 ** 20)


def test_occupancy_on_a_huge_lattice():
    lattice = Lattice(origin=Fraction(0), step=Fraction(1, 2 ** 80), M=2 ** 81)
    assert occupancy_set(Polynomial([-1, 1]), lattice) == {2 ** 80}
    thirds = Polynomial.from_roots([Fraction(1, 3), Fraction(2, 3)])
    assert occupancy_set(thirds, lattice) == {-(-(2 ** 80) // 3), -(-(2 ** 81) // 3)}
