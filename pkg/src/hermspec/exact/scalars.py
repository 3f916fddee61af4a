"""
Exact scalars: rationals, complex rationals and rational bounds.

ExactScalar is the standard library Fraction, which already keeps every value
in lowest terms with a positive denominator. This module adds the complex
variant needed to ingest Hermitian matrices, lossless parsing and rendering,
and rational enclosures for the two irrational operations the package needs
(square roots and natural logarithms).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple, Union

from hermspec.exact.exceptions import ParseError

ExactScalar = Fraction

RationalLike = Union[Fraction, int, str]


def to_exact(value: Any) -> Fraction:
    """
    Convert an int, Fraction or rational string ("-3/7", "2", "1.25") to a Fraction.

    Floats are refused: a binary float is never an exact input.

    Raises:
        ParseError: If the value is not an exact rational
    """
    if isinstance(value, bool):
        raise ParseError(f"Boolean is not a rational: {value!r}")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip().replace('−', '-'))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Invalid rational string {value!r}: {e}") from e
    raise ParseError(f"Expected a rational string, got {type(value).__name__}: {value!r}")


def format_exact(value: Fraction) -> str:
    """Render a rational losslessly as 'n' or 'n/d'."""
    return str(Fraction(value))


@dataclass(frozen=True)
class ComplexExact:
    """Complex number with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    @classmethod
    def parse(cls, value: Any) -> 'ComplexExact':
        """Parse [re, im], a bare rational, or an existing ComplexExact."""
        if isinstance(value, ComplexExact):
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise ParseError(f"Complex entry must be [re, im], got {value!r}")
            return cls(to_exact(value[0]), to_exact(value[1]))
        return cls(to_exact(value), Fraction(0))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> 'ComplexExact':
        return ComplexExact(self.re, -self.im)

    def __add__(self, other: 'ComplexExact') -> 'ComplexExact':
        return ComplexExact(self.re + other.re, self.im + other.im)

    def __sub__(self, other: 'ComplexExact') -> 'ComplexExact':
        return ComplexExact(self.re - other.re, self.im - other.im)

    def __mul__(self, other: 'ComplexExact') -> 'ComplexExact':
        return ComplexExact(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> 'ComplexExact':
        return ComplexExact(-self.re, -self.im)

    def __str__(self) -> str:
        return f"({self.re}, {self.im})"


def _isqrt_floor(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(math.isqrt(x.numerator * scale * scale // x.denominator), scale)


def exact_sqrt(x: Fraction) -> Union[Fraction, None]:
    """Return sqrt(x) if x is the square of a rational, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_bits(x: Fraction, bits: Optional[int]) -> int:
    # enough fractional bits that a positive x never rounds to 0
    if bits is not None:
        return bits
    return max(64, x.denominator.bit_length() // 2 + 64)


def sqrt_lower(x: Fraction, bits: Optional[int] = None) -> Fraction:
    """
    Largest dyadic with `bits` fractional bits not exceeding sqrt(x); exact for squares.

    By default the precision grows with x's denominator, so sqrt_lower(x) > 0
    whenever x > 0.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"sqrt of negative value {x}")
    exact = exact_sqrt(x)
    if exact is not None:
        return exact
    return _isqrt_floor(x, _sqrt_bits(x, bits))


def sqrt_upper(x: Fraction, bits: Optional[int] = None) -> Fraction:
    """Smallest dyadic with `bits` fractional bits not below sqrt(x); exact for squares."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"sqrt of negative value {x}")
    exact = exact_sqrt(x)
    if exact is not None:
        return exact
    bits = _sqrt_bits(x, bits)
    return _isqrt_floor(x, bits) + Fraction(1, 1 << bits)


def ceil_sqrt(x: Fraction) -> int:
    """Smallest integer r with r*r >= x (x >= 0)."""
    x = Fraction(x)
    r = math.isqrt(math.ceil(x))
    while r * r < x:
        r += 1
    return r


def round_down(x: Fraction, denominator: int) -> Fraction:
    """Largest rational with the given denominator that does not exceed x."""
    return Fraction(math.floor(x * denominator), denominator)


def round_up(x: Fraction, denominator: int) -> Fraction:
    """Smallest rational with the given denominator that is not below x."""
    return Fraction(math.ceil(x * denominator), denominator)


def _relative_denominator(x: Fraction, denominator: int) -> int:
    # below 1 the grid is refined by x's binary exponent, so the resolution
    # stays at least 1/denominator relative to |x|
    if x == 0:
        return denominator
    size = abs(x)
    exponent = size.numerator.bit_length() - size.denominator.bit_length()
    return denominator << max(0, 1 - exponent)


def round_down_relative(x: Fraction, denominator: int) -> Fraction:
    """
    Round x down on a grid fine enough relative to |x|.

    Unlike round_down with a fixed grid, a tiny positive x never rounds to 0.
    """
    x = Fraction(x)
    return round_down(x, _relative_denominator(x, denominator))


def round_up_relative(x: Fraction, denominator: int) -> Fraction:
    """Round x up on a grid fine enough relative to |x|."""
    x = Fraction(x)
    return round_up(x, _relative_denominator(x, denominator))


def _atanh_series_bounds(u: Fraction, terms: int) -> Tuple[Fraction, Fraction]:
    # 2*atanh(u) = 2 * sum u^(2j+1)/(2j+1); tail bounded by a geometric series
    total = Fraction(0)
    power = u
    u_sq = u * u
    for j in range(terms):
        total += power / (2 * j + 1)
        power *= u_sq
    tail = power / ((2 * terms + 1) * (1 - u_sq))
    return 2 * total, 2 * (total + tail)


def ln_interval(x: Fraction, terms: int = 40) -> Tuple[Fraction, Fraction]:
    """
    Rational enclosure lo <= ln(x) <= hi for x > 0.

    Reduces x = 2^k * y with y in [1, 2) and sums the atanh series for ln(y)
    and ln(2) with an explicit geometric tail bound.

    Args:
        x: Positive rational argument
        terms: Number of series terms (error roughly 9^-terms)

    Returns:
        Tuple (lo, hi) of rationals
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"ln of non-positive value {x}")
    if x == 1:
        return Fraction(0), Fraction(0)
    k = x.numerator.bit_length() - x.denominator.bit_length()
    y = x / Fraction(2) ** k
    while y >= 2:
        y /= 2
        k += 1
    while y < 1:
        y *= 2
        k -= 1
    y_lo, y_hi = _atanh_series_bounds((y - 1) / (y + 1), terms)
    ln2_lo, ln2_hi = _atanh_series_bounds(Fraction(1, 3), terms)
    if k >= 0:
        return k * ln2_lo + y_lo, k * ln2_hi + y_hi
    return k * ln2_hi + y_lo, k * ln2_lo + y_hi
