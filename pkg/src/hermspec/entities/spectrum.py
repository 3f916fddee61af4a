"""
Multiplicity spectrum and syzygy report entities.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from hermspec.entities.base_result import BaseResult
from hermspec.exact.polynomial import Polynomial
from hermspec.utils.type_conversion import parse_rational, poly_from_list, poly_to_list, rational_str


@dataclass
class MultiplicityGroup:
    """Roots sharing multiplicity q, collected into one monic factor of degree n."""

    q: int
    n: int
    factor: Polynomial

    def to_dict(self) -> Dict[str, Any]:
        return {'q': self.q, 'n': self.n, 'factor': poly_to_list(self.factor)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MultiplicityGroup':
        return cls(q=int(data['q']), n=int(data['n']), factor=poly_from_list(data['factor']))


@dataclass
class MultiplicitySpectrum(BaseResult):
    """
    Factorization of a characteristic polynomial into same-multiplicity factors.

    The product of factor**q over all groups is the characteristic polynomial;
    groups are ordered by ascending q.
    """

    n: int
    m: int
    groups: List[MultiplicityGroup]
    min_poly: Polynomial

    @property
    def l(self) -> int:
        """Number of distinct multiplicities."""
        return len(self.groups)

    def multiplicity_of(self, q: int) -> MultiplicityGroup:
        for group in self.groups:
            if group.q == q:
                return group
        raise KeyError(q)

    def get_warnings(self) -> List[str]:
        return []

    def get_summary(self) -> str:
        parts = ', '.join(f"{g.n} root(s) of multiplicity {g.q}" for g in self.groups)
        return f"degree {self.n}, {self.m} distinct: {parts}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'm': self.m,
            'min_poly': poly_to_list(self.min_poly),
            'groups': [g.to_dict() for g in self.groups],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MultiplicitySpectrum':
        return cls(
            n=int(data['n']),
            m=int(data['m']),
            groups=[MultiplicityGroup.from_dict(g) for g in data.get('groups', [])],
            min_poly=poly_from_list(data['min_poly']),
        )


@dataclass
class SyzygyClass:
    """Determinant evidence for one multiplicity class."""

    q: int
    n: int
    vanishing_orders: List[int]
    nonvanishing_order: int
    nonvanishing_det: Fraction

    @property
    def syzygies(self) -> int:
        # one of the n vanishing equations only fixes q itself
        return self.n - 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'q': self.q,
            'n': self.n,
            'vanishing_orders': list(self.vanishing_orders),
            'nonvanishing_order': self.nonvanishing_order,
            'nonvanishing_det': rational_str(self.nonvanishing_det),
            'syzygies': self.syzygies,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SyzygyClass':
        return cls(
            q=int(data['q']),
            n=int(data['n']),
            vanishing_orders=[int(k) for k in data.get('vanishing_orders', [])],
            nonvanishing_order=int(data['nonvanishing_order']),
            nonvanishing_det=parse_rational(data['nonvanishing_det']),
        )


@dataclass
class SyzygyReport(BaseResult):
    """Verified syzygies among the trace invariants; total equals m - l."""

    m: int
    classes: List[SyzygyClass] = field(default_factory=list)

    @property
    def count(self) -> int:
        return sum(c.syzygies for c in self.classes)

    def get_warnings(self) -> List[str]:
        return []

    def get_summary(self) -> str:
        return f"{self.count} syzygies across {len(self.classes)} multiplicity class(es)"

    def to_dict(self) -> Dict[str, Any]:
        return {'m': self.m, 'count': self.count, 'classes': [c.to_dict() for c in self.classes]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SyzygyReport':
        return cls(m=int(data['m']), classes=[SyzygyClass.from_dict(c) for c in data.get('classes', [])])
