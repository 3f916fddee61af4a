"""
Certified iteration results: minimal-gap lower bounds and extremal-root bounds.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from hermspec.entities.base_result import BaseResult
from hermspec.exact.polynomial import Polynomial
from hermspec.utils.type_conversion import (
    capped_trace,
    optional_rational_str,
    parse_optional_rational,
    parse_rational,
    parse_trace,
    poly_from_list,
    poly_to_list,
    rational_str,
)


class Side(str, Enum):
    """Which extreme root an extremal iteration approaches."""
    MIN = 'min'
    MAX = 'max'


@dataclass
class GapIteration(BaseResult):
    """
    Increasing lower bounds eps_k^2 on the squared minimal root gap.

    certified_lower is a rational lower bound on the gap itself and is valid
    whether or not the iteration converged.
    """

    eps_sq: List[Fraction]
    converged: bool
    certified_lower: Fraction
    gap_poly: Polynomial
    exact: bool = False
    rounded: bool = False
    trace_cap: Optional[int] = None

    @property
    def iterations(self) -> int:
        return len(self.eps_sq) - 1

    @property
    def final_eps_sq(self) -> Fraction:
        return self.eps_sq[-1]

    def get_warnings(self) -> List[str]:
        if self.converged:
            return []
        return [f"gap iteration did not converge in {self.iterations} steps; lower bound still certified"]

    def get_summary(self) -> str:
        kind = "exact" if self.exact else "lower bound"
        return f"minimal gap {kind} {self.certified_lower} after {self.iterations} step(s)"

    def to_dict(self) -> Dict[str, Any]:
        # 'mu' only when the gap itself was hit; otherwise it is a lower bound
        mu_key = 'mu' if self.exact else 'mu_lower'
        return {
            'eps_sq': capped_trace(self.eps_sq, self.trace_cap),
            'iterations': self.iterations,
            'converged': self.converged,
            'certified_lower': rational_str(self.certified_lower),
            mu_key: rational_str(self.certified_lower),
            'exact': self.exact,
            'rounded': self.rounded,
            'gap_poly': poly_to_list(self.gap_poly),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GapIteration':
        return cls(
            eps_sq=parse_trace(data.get('eps_sq', [])),
            converged=bool(data.get('converged', False)),
            certified_lower=parse_rational(data['certified_lower']),
            gap_poly=poly_from_list(data.get('gap_poly', ['1'])),
            exact=bool(data.get('exact', False)),
            rounded=bool(data.get('rounded', False)),
        )


@dataclass
class ExtremalIteration(BaseResult):
    """
    Monotone bounds on the smallest (side=min) or largest (side=max) root.

    values holds only strict bounds, so certified_bound lies strictly outside
    the root hull. When a step lands exactly on the root it is recorded in
    exact_extreme instead.
    """

    side: Side
    values: List[Fraction]
    certified_bound: Fraction
    converged: bool
    exact_extreme: Optional[Fraction] = None
    rounded: bool = False
    trace_cap: Optional[int] = None

    @property
    def iterations(self) -> int:
        return len(self.values) - 1

    def get_warnings(self) -> List[str]:
        if self.converged:
            return []
        return [f"{self.side.value}-side bound did not converge in {self.iterations} steps"]

    def get_summary(self) -> str:
        if self.exact_extreme is not None:
            return f"{self.side.value} root is exactly {self.exact_extreme}"
        if self.side is Side.MIN:
            return f"smallest root > {self.certified_bound}"
        return f"largest root < {self.certified_bound}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'side': self.side.value,
            'values': capped_trace(self.values, self.trace_cap),
            'iterations': self.iterations,
            'certified_bound': rational_str(self.certified_bound),
            'converged': self.converged,
            'exact_extreme': optional_rational_str(self.exact_extreme),
            'rounded': self.rounded,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ExtremalIteration':
        return cls(
            side=Side(data['side']),
            values=parse_trace(data.get('values', [])),
            certified_bound=parse_rational(data['certified_bound']),
            converged=bool(data.get('converged', False)),
            exact_extreme=parse_optional_rational(data.get('exact_extreme')),
            rounded=bool(data.get('rounded', False)),
        )
