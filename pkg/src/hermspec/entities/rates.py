"""
Convergence-rate report for equidistant-root (Wilkinson generalized) polynomials.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from hermspec.entities.base_result import BaseResult
from hermspec.utils.type_conversion import (
    capped_trace,
    parse_rational,
    parse_trace,
    rational_str,
)


@dataclass
class RateReport(BaseResult):
    """
    Rate constants and the v_k sequence for a given m.

    v_upper and v_lower bracket the exact v_k; they coincide for the first
    exact_steps entries and separate only once conservative rounding kicks in.
    """

    m: int
    B: Fraction
    A: Fraction
    v_upper: List[Fraction]
    v_lower: List[Fraction]
    exact_steps: int
    lower_geo: Fraction
    upper_geo: Fraction
    delta: Fraction
    k_min: int
    k_max: int
    observed_k: Optional[int] = None
    sandwich_violations: List[int] = field(default_factory=list)
    sandwich_undecided: List[int] = field(default_factory=list)
    trace_cap: Optional[int] = None

    @property
    def v(self) -> List[Fraction]:
        return self.v_upper

    @property
    def one_minus_A(self) -> Fraction:
        return 1 - self.A

    def get_warnings(self) -> List[str]:
        warnings = [f"rate sandwich violated at k={k}" for k in self.sandwich_violations]
        if self.sandwich_undecided:
            warnings.append(f"rate sandwich undecided after rounding at k={self.sandwich_undecided}")
        if self.observed_k is not None and not (self.k_min <= self.observed_k <= self.k_max):
            warnings.append(f"observed k={self.observed_k} outside predicted window [{self.k_min}, {self.k_max}]")
        return warnings

    def get_summary(self) -> str:
        return f"m={self.m}: B={self.B}, A={self.A}, predicted k in [{self.k_min}, {self.k_max}]"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'm': self.m,
            'B': rational_str(self.B),
            'A': rational_str(self.A),
            'one_minus_A': rational_str(self.one_minus_A),
            'v': capped_trace(self.v_upper, self.trace_cap),
            'v_lower': capped_trace(self.v_lower, self.trace_cap),
            'exact_steps': self.exact_steps,
            'lower_geo': rational_str(self.lower_geo),
            'upper_geo': rational_str(self.upper_geo),
            'delta': rational_str(self.delta),
            'k_min': self.k_min,
            'k_max': self.k_max,
            'observed_k': self.observed_k,
            'sandwich_violations': list(self.sandwich_violations),
            'sandwich_undecided': list(self.sandwich_undecided),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RateReport':
        return cls(
            m=int(data['m']),
            B=parse_rational(data['B']),
            A=parse_rational(data['A']),
            v_upper=parse_trace(data.get('v', [])),
            v_lower=parse_trace(data.get('v_lower', [])),
            exact_steps=int(data.get('exact_steps', 0)),
            lower_geo=parse_rational(data['lower_geo']),
            upper_geo=parse_rational(data['upper_geo']),
            delta=parse_rational(data['delta']),
            k_min=int(data['k_min']),
            k_max=int(data['k_max']),
            observed_k=data.get('observed_k'),
            sandwich_violations=[int(k) for k in data.get('sandwich_violations', [])],
            sandwich_undecided=[int(k) for k in data.get('sandwich_undecided', [])],
        )
