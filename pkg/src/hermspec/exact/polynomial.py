"""
Dense univariate polynomials over the rationals.

Coefficients are stored in ascending order (index k holds the coefficient of
x^k). Degrees in this package stay small, so a dense tuple is the whole
representation. Division is exact-or-error; there is no floating fallback.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, List, Sequence, Tuple, Union

from hermspec.exact.exceptions import NonzeroRemainderError
from hermspec.exact.scalars import format_exact

Scalar = Union[Fraction, int]


def _normalize(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values) if values else (Fraction(0),)


@dataclass(frozen=True)
class Polynomial:
    """
    Immutable polynomial with exact rational coefficients.

    The zero polynomial is stored as (0,) and reports degree 0.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _normalize(self.coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> 'Polynomial':
        return cls((Fraction(value),))

    @classmethod
    def x(cls) -> 'Polynomial':
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> 'Polynomial':
        """Monic polynomial prod (x - r) over the given roots (repeat a root for multiplicity)."""
        result = cls.constant(1)
        for r in roots:
            result = result * cls((-Fraction(r), Fraction(1)))
        return result

    @classmethod
    def from_spectrum(cls, spectrum: Iterable[Tuple[Scalar, int]]) -> 'Polynomial':
        """Monic polynomial prod (x - p)^r over (root, multiplicity) pairs."""
        result = cls.constant(1)
        for root, multiplicity in spectrum:
            result = result * cls((-Fraction(root), Fraction(1))) ** multiplicity
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def __bool__(self) -> bool:
        return not self.is_zero

    def monic(self) -> 'Polynomial':
        """Divide through by the leading coefficient."""
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial has no monic form")
        lead = self.leading
        return Polynomial(c / lead for c in self.coeffs)

    @cached_property
    def _integer_form(self) -> Tuple[List[int], int]:
        scale = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in self.coeffs), 1)
        return [c.numerator * (scale // c.denominator) for c in self.coeffs], scale

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> 'Polynomial':
        return _as_poly(other) - self

    def __mul__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            factor = Fraction(other)
            return Polynomial(c * factor for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return Polynomial((0,))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Polynomial':
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree > 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = format_exact(magnitude)
            else:
                power = 'x' if k == 1 else f'x^{k}'
                body = power if magnitude == 1 else f'{format_exact(magnitude)}*{power}'
            sign = '-' if c < 0 else '+'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text


def _as_poly(value: Union[Polynomial, Scalar]) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial.constant(value)


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    """
    Evaluate p at x exactly.

    Works on the integer-scaled coefficients with a homogenised Horner scheme,
    so only one gcd reduction happens per call.
    """
    x = Fraction(x)
    ints, scale = p._integer_form
    a, b = x.numerator, x.denominator
    d = len(ints) - 1
    acc = ints[d]
    b_power = 1
    for k in range(d - 1, -1, -1):
        b_power *= b
        acc = acc * a + ints[k] * b_power
    return Fraction(acc, scale * b ** d)


def poly_derivative(p: Polynomial) -> Polynomial:
    """Formal derivative; the derivative of a constant is the zero polynomial."""
    if p.degree == 0:
        return Polynomial((0,))
    return Polynomial(k * p.coeffs[k] for k in range(1, len(p.coeffs)))


def poly_divmod(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Polynomial long division returning (quotient, remainder)."""
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    remainder = list(num.coeffs)
    dd = den.degree
    lead = den.leading
    if num.degree < dd or num.is_zero:
        return Polynomial((0,)), num
    quotient = [Fraction(0)] * (num.degree - dd + 1)
    for shift in range(num.degree - dd, -1, -1):
        factor = remainder[shift + dd] / lead
        quotient[shift] = factor
        if factor:
            for j, c in enumerate(den.coeffs):
                remainder[shift + j] -= factor * c
    return Polynomial(quotient), Polynomial(remainder[:dd] or [0])


def poly_div_exact(num: Polynomial, den: Polynomial) -> Polynomial:
    """
    Exact quotient num / den.

    Raises:
        NonzeroRemainderError: If den does not divide num in Q[x]
    """
    quotient, remainder = poly_divmod(num, den)
    if not remainder.is_zero:
        raise NonzeroRemainderError(
            f"{den} does not divide {num} exactly (remainder {remainder})",
            {'remainder': [format_exact(c) for c in remainder.coeffs]},
        )
    return quotient


def interpolate(nodes: Sequence[Scalar], values: Sequence[Scalar]) -> Polynomial:
    """Unique polynomial of degree < len(nodes) through the points (Newton divided differences)."""
    xs = [Fraction(v) for v in nodes]
    table = [Fraction(v) for v in values]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    result = Polynomial.constant(table[n - 1])
    for i in range(n - 2, -1, -1):
        result = result * Polynomial((-xs[i], Fraction(1))) + table[i]
    return result
