"""
Tests for the minimal polynomial, multiplicities, factorization and syzygies.
"""

from fractions import Fraction

import pytest
import sympy

from conftest import charpoly, random_corpus
from hermspec.analysis.moments import power_sums_from_coeffs
from hermspec.analysis.spectrum import (
    deflated_moments,
    hankel_pairing,
    minimal_polynomial,
    minimal_polynomial_of,
    multiplicity_of_root,
    multiplicity_spectrum,
    power_vector,
    syzygy_check,
)
from hermspec.entities.moments import MomentSeq
from hermspec.exact.exceptions import LengthMismatchError, NotARootError, NotMonicError, NotRealRootedError
from hermspec.exact.polynomial import Polynomial

CORPUS = random_corpus(seed=2024, size=200)


def test_minimal_polynomial_drops_repeats(double_then_single):
    t = power_sums_from_coeffs(double_then_single, 4)
    assert minimal_polynomial(t, 2) == Polynomial([2, -3, 1])
    pm, ladder = minimal_polynomial_of(double_then_single)
    assert pm == Polynomial([2, -3, 1])
    assert ladder.m == 2


def test_minimal_polynomial_matches_sympy_squarefree_part():
    x = sympy.Symbol('x')
    for spectrum in CORPUS[:40]:
        cp = charpoly(spectrum)
        pm, _ = minimal_polynomial_of(cp)
        f = sympy.Poly(sum(int(c) * x ** k for k, c in enumerate(cp.coeffs)), x)
        oracle = sympy.quo(f, sympy.gcd(f, f.diff(x)))
        assert list(pm.coeffs) == [Fraction(str(c)) for c in reversed(oracle.monic().all_coeffs())]


def test_minimal_polynomial_rejects_bad_input():
    with pytest.raises(NotMonicError):
        minimal_polynomial_of(Polynomial([2, -3, 2]))
    with pytest.raises(NotRealRootedError) as info:
        minimal_polynomial_of(Polynomial([1, 0, 1]))
    assert info.value.details['offending_index'] == 2
    assert info.value.details['dets'] == ["2", "-4"]


def test_multiplicity_of_root(double_then_single):
    t = power_sums_from_coeffs(double_then_single, 4)
    assert multiplicity_of_root(t, 2, Fraction(1)) == 2
    assert multiplicity_of_root(t, 2, Fraction(2)) == 1
    with pytest.raises(NotARootError):
        multiplicity_of_root(t, 2, Fraction(3))


def test_kronecker_pairing_on_random_spectra():
    for spectrum in random_corpus(seed=8, size=50, max_m=5):
        cp = charpoly(spectrum)
        m = len(spectrum)
        t = power_sums_from_coeffs(cp, 2 * m)
        vectors = [power_vector(p, m) for p, _ in spectrum]
        for i, (_, r) in enumerate(spectrum):
            for j in range(m):
                expected = Fraction(1, r) if i == j else 0
                assert hankel_pairing(t, m, vectors[i], vectors[j]) == expected


def test_deflated_moments_need_equal_lengths(double_then_single):
    t = power_sums_from_coeffs(double_then_single, 4)
    s = power_sums_from_coeffs(Polynomial([2, -3, 1]), 4)
    assert list(deflated_moments(t, s, 1)) == [1, 1, 1, 1]
    with pytest.raises(LengthMismatchError):
        deflated_moments(t, power_sums_from_coeffs(Polynomial([2, -3, 1]), 3), 1)


def test_factorization_of_double_then_single(double_then_single):
    spectrum = multiplicity_spectrum(double_then_single)
    assert (spectrum.n, spectrum.m, spectrum.l) == (3, 2, 2)
    assert [(g.q, g.n) for g in spectrum.groups] == [(1, 1), (2, 1)]
    assert spectrum.multiplicity_of(1).factor == Polynomial([-2, 1])
    assert spectrum.multiplicity_of(2).factor == Polynomial([-1, 1])
    with pytest.raises(KeyError):
        spectrum.multiplicity_of(3)


def test_single_eigenvalue_factorization():
    spectrum = multiplicity_spectrum(Polynomial.from_spectrum([(Fraction(-7, 2), 4)]))
    assert [(g.q, g.n) for g in spectrum.groups] == [(4, 1)]
    assert syzygy_check(Polynomial.from_spectrum([(Fraction(-7, 2), 4)]), spectrum).count == 0


@pytest.mark.slow
def test_factorization_reconstructs_random_spectra():
    for spectrum in CORPUS:
        cp = charpoly(spectrum)
        result = multiplicity_spectrum(cp)
        product = Polynomial([1])
        for group in result.groups:
            product = product * group.factor ** group.q
        assert product == cp
        assert sum(g.n for g in result.groups) == result.m == len(spectrum)
        assert sum(g.n * g.q for g in result.groups) == cp.degree
        for root, r in spectrum:
            group = result.multiplicity_of(r)
            assert group.factor(root) == 0
            for other in result.groups:
                if other.q != r:
                    assert other.factor(root) != 0


@pytest.mark.slow
def test_syzygy_count_on_random_spectra():
    for spectrum in CORPUS:
        cp = charpoly(spectrum)
        result = multiplicity_spectrum(cp)
        report = syzygy_check(cp, result)
        assert report.count == result.m - result.l
        for cls in report.classes:
            assert cls.vanishing_orders == list(range(result.m - cls.n + 1, result.m + 1))
            assert cls.nonvanishing_det != 0


def test_spectrum_round_trips_through_dict(double_then_single):
    spectrum = multiplicity_spectrum(double_then_single)
    data = spectrum.to_dict()
    assert data['groups'][0] == {'q': 1, 'n': 1, 'factor': ["-2", "1"]}
    assert type(spectrum).from_dict(data) == spectrum


def test_moment_sequence_is_frozen():
    t = MomentSeq((Fraction(1),), 1)
    with pytest.raises(AttributeError):
        t.values = ()
