"""
Analysis request entity.

A request names one command and carries its validated input (a polynomial,
a Hermitian matrix or a moment sequence) plus run options.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from hermspec.entities.moments import HermitianInput, MomentSeq
from hermspec.exact.polynomial import Polynomial
from hermspec.utils.type_conversion import optional_rational_str, poly_to_list, rational_list, rational_str


class Command(str, Enum):
    """Commands understood by the processor."""
    ANALYZE = 'analyze'
    MINPOLY = 'minpoly'
    FACTOR = 'factor'
    GAP = 'gap'
    BOUNDS = 'bounds'
    COUNT = 'count'
    RATES = 'rates'
    CLASSIFY = 'classify'
    COMPARE = 'compare'


class InputKind(str, Enum):
    """Which of the three input forms a document used."""
    POLY = 'poly'
    MATRIX = 'matrix'
    MOMENTS = 'moments'


@dataclass
class AnalysisInput:
    """Exactly one of poly, matrix or moments, according to kind."""

    kind: InputKind
    poly: Optional[Polynomial] = None
    matrix: Optional[HermitianInput] = None
    moments: Optional[MomentSeq] = None

    def to_dict(self) -> Dict[str, Any]:
        if self.kind is InputKind.POLY and self.poly is not None:
            return {'poly': poly_to_list(self.poly)}
        if self.kind is InputKind.MATRIX and self.matrix is not None:
            return self.matrix.to_dict()
        if self.moments is not None:
            return {'moments': rational_list(self.moments.values)}
        return {}


@dataclass
class RequestOptions:
    """Per-run options; None means 'use the configured setting'."""

    tolerance: Fraction = Fraction(1, 10 ** 6)
    max_iter: Optional[int] = None
    output_format: str = 'json'
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    m: Optional[int] = None
    delta: Optional[Fraction] = None
    steps: int = 10
    strict: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'tolerance': rational_str(self.tolerance),
            'max_iter': self.max_iter,
            'a': optional_rational_str(self.a),
            'b': optional_rational_str(self.b),
            'm': self.m,
            'delta': optional_rational_str(self.delta),
            'steps': self.steps,
            'strict': self.strict,
        }


@dataclass
class AnalysisRequest:
    """A validated command with its input(s) and options."""

    command: Command
    input: Optional[AnalysisInput] = None
    second: Optional[AnalysisInput] = None
    options: RequestOptions = field(default_factory=RequestOptions)
    warnings: List[str] = field(default_factory=list)

    def echo(self) -> Dict[str, Any]:
        """Input echo stored in the report."""
        if self.command is Command.COMPARE:
            return {
                'first': self.input.to_dict() if self.input else {},
                'second': self.second.to_dict() if self.second else {},
            }
        if self.command is Command.RATES:
            return {'m': self.options.m, 'delta': optional_rational_str(self.options.delta), 'steps': self.options.steps}
        return self.input.to_dict() if self.input else {}
