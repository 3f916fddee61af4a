"""
Hankel determinant ladder entity.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from hermspec.entities.base_result import BaseResult
from hermspec.utils.type_conversion import parse_rational_list, rational_list


@dataclass
class HankelLadder(BaseResult):
    """
    Determinants D_1..D_n of the leading Hankel blocks.

    When valid_real holds, D_1..D_m are positive and the rest vanish; m is the
    number of distinct roots. Otherwise offending_index names the first D_k
    that breaks that pattern.
    """

    dets: List[Fraction]
    m: int
    valid_real: bool
    offending_index: Optional[int] = None
    sign_permanences: int = 0
    sign_variations: int = 0

    @property
    def n(self) -> int:
        return len(self.dets)

    @property
    def distinct_real_roots(self) -> int:
        """Permanences minus variations over 1, D_1, ..., D_m."""
        return self.sign_permanences - self.sign_variations

    def get_warnings(self) -> List[str]:
        if self.valid_real:
            return []
        return [f"Hankel ladder breaks the real-rooted pattern at D_{self.offending_index}"]

    def get_summary(self) -> str:
        status = "real-rooted" if self.valid_real else f"not real-rooted (D_{self.offending_index})"
        return f"{self.m} distinct roots, {status}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'dets': rational_list(self.dets),
            'm': self.m,
            'valid_real': self.valid_real,
            'offending_index': self.offending_index,
            'sign_permanences': self.sign_permanences,
            'sign_variations': self.sign_variations,
            'distinct_real_roots': self.distinct_real_roots,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'HankelLadder':
        return cls(
            dets=parse_rational_list(data.get('dets', [])),
            m=int(data.get('m', 0)),
            valid_real=bool(data.get('valid_real', False)),
            offending_index=data.get('offending_index'),
            sign_permanences=int(data.get('sign_permanences', 0)),
            sign_variations=int(data.get('sign_variations', 0)),
        )
