"""
Shared fixtures and spectrum generators for the hermspec test suite.
"""

import random
from fractions import Fraction
from typing import List, Tuple

import pytest

from hermspec.exact.polynomial import Polynomial

Spectrum = List[Tuple[Fraction, int]]


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """Run every test away from real config files and HERMSPEC_* variables."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path))
    for name in ("TOL", "MAX_ITER", "TRACE_CAP", "MAX_DENOMINATOR", "FORMAT", "LOG_LEVEL"):
        monkeypatch.delenv(f"HERMSPEC_{name}", raising=False)


def random_spectrum(rng: random.Random, max_m: int = 6, low: int = -20, high: int = 20, max_mult: int = 4) -> Spectrum:
    """Distinct integer roots with random multiplicities, sorted by root."""
    m = rng.randint(1, max_m)
    roots = sorted(rng.sample(range(low, high + 1), m))
    return [(Fraction(r), rng.randint(1, max_mult)) for r in roots]


def random_corpus(seed: int, size: int, min_m: int = 1, **kwargs) -> List[Spectrum]:
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < size:
        spectrum = random_spectrum(rng, **kwargs)
        if len(spectrum) >= min_m:
            corpus.append(spectrum)
    return corpus


def charpoly(spectrum: Spectrum) -> Polynomial:
    return Polynomial.from_spectrum(spectrum)


def min_gap_of(spectrum: Spectrum) -> Fraction:
    roots = [p for p, _ in spectrum]
    return min(b - a for a, b in zip(roots, roots[1:]))


@pytest.fixture
def double_then_single() -> Polynomial:
    """(x - 1)^2 (x - 2)."""
    return Polynomial.from_spectrum([(1, 2), (2, 1)])


@pytest.fixture
def three_simple() -> Polynomial:
    """x (x - 1) (x - 3)."""
    return Polynomial.from_roots([0, 1, 3])
