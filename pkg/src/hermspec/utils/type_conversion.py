"""
Type conversion utilities for report serialization.

Rationals cross every boundary as strings ("-3/7"), never as floats. These
helpers convert the exact types used by the analysis layer to and from the
plain JSON-compatible values stored in reports.
"""

from fractions import Fraction
from typing import Any, Iterable, List, Optional

from hermspec.exact.polynomial import Polynomial
from hermspec.exact.scalars import format_exact, to_exact


def rational_str(value: Fraction) -> str:
    """Render a rational as its canonical string."""
    return format_exact(value)


def optional_rational_str(value: Optional[Fraction]) -> Optional[str]:
    """Render a rational, passing None through."""
    return None if value is None else format_exact(value)


def rational_list(values: Iterable[Fraction]) -> List[str]:
    """Render a sequence of rationals as strings."""
    return [format_exact(v) for v in values]


def parse_rational(value: Any) -> Fraction:
    """Parse a rational string (or int) back into a Fraction."""
    return to_exact(value)


def parse_optional_rational(value: Any) -> Optional[Fraction]:
    """Parse a rational string, passing None through."""
    return None if value is None else to_exact(value)


def parse_rational_list(values: Iterable[Any]) -> List[Fraction]:
    """Parse a list of rational strings."""
    return [to_exact(v) for v in values]


def poly_to_list(p: Polynomial) -> List[str]:
    """Ascending coefficient strings of a polynomial."""
    return rational_list(p.coeffs)


def poly_from_list(values: Iterable[Any]) -> Polynomial:
    """Polynomial from ascending coefficient strings."""
    return Polynomial(parse_rational_list(values))


def safe_int_conversion(value: Any, default: int = 0) -> int:
    """
    Safely convert a value to int.

    Accepts ints and integer strings; anything else yields the default.

    Args:
        value: The value to convert
        default: Default value to return if conversion fails

    Returns:
        int: The converted value or default if conversion fails
    """
    if isinstance(value, bool):
        return default
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            return default
    return default


ELISION_MARKER = '...'


def capped_trace(values: List[Fraction], cap: Optional[int]) -> List[str]:
    """
    Render an iteration trace, eliding the middle when it exceeds `cap`.

    The first cap - 1 entries and the final entry are kept, separated by
    ELISION_MARKER.
    """
    if cap is None or len(values) <= cap:
        return rational_list(values)
    return rational_list(values[:cap - 1]) + [ELISION_MARKER, format_exact(values[-1])]


def parse_trace(values: Iterable[Any]) -> List[Fraction]:
    """Parse a rendered trace, dropping any elision marker."""
    return [to_exact(v) for v in values if v != ELISION_MARKER]
