"""
Lattice, orbit-class signature and comparison entities.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Set

from hermspec.entities.base_result import BaseResult
from hermspec.utils.type_conversion import parse_rational, rational_list, rational_str


@dataclass(frozen=True)
class Lattice:
    """Sites x_j = origin + j * step for j = 0..M; cell j is ]x_{j-1}, x_j]."""

    origin: Fraction
    step: Fraction
    M: int

    def site(self, j: int) -> Fraction:
        return self.origin + j * self.step

    @property
    def end(self) -> Fraction:
        return self.site(self.M)

    def to_dict(self) -> Dict[str, Any]:
        return {'origin': rational_str(self.origin), 'step': rational_str(self.step), 'M': self.M}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Lattice':
        return cls(parse_rational(data['origin']), parse_rational(data['step']), int(data['M']))


@dataclass
class OrbitSignature(BaseResult):
    """
    Multiplicities in ascending eigenvalue order, plus the occupancy evidence.

    occupancy maps each multiplicity to the lattice cells holding its roots.
    A single-eigenvalue input has no lattice.
    """

    ordered_multiplicities: List[int]
    occupancy: Dict[int, Set[int]] = field(default_factory=dict)
    lattice: Optional[Lattice] = None

    def get_warnings(self) -> List[str]:
        return []

    def get_summary(self) -> str:
        return f"class {self.ordered_multiplicities}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ordered_multiplicities': list(self.ordered_multiplicities),
            'occupancy': {str(q): sorted(cells) for q, cells in sorted(self.occupancy.items())},
            'lattice': self.lattice.to_dict() if self.lattice else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'OrbitSignature':
        lattice = data.get('lattice')
        return cls(
            ordered_multiplicities=[int(r) for r in data.get('ordered_multiplicities', [])],
            occupancy={int(q): set(cells) for q, cells in data.get('occupancy', {}).items()},
            lattice=Lattice.from_dict(lattice) if lattice else None,
        )


@dataclass
class OrbitComparison(BaseResult):
    """Verdicts for two inputs: same unitary orbit, and same orbit class."""

    same_orbit: bool
    same_class: bool
    compared_traces: int
    first_traces: List[Fraction]
    second_traces: List[Fraction]
    first_signature: OrbitSignature
    second_signature: OrbitSignature

    def get_warnings(self) -> List[str]:
        return []

    def get_summary(self) -> str:
        orbit = "same orbit" if self.same_orbit else "different orbits"
        klass = "same class" if self.same_class else "different classes"
        return f"{orbit}, {klass}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'same_orbit': self.same_orbit,
            'same_class': self.same_class,
            'compared_traces': self.compared_traces,
            'first_traces': rational_list(self.first_traces),
            'second_traces': rational_list(self.second_traces),
            'first_signature': self.first_signature.to_dict(),
            'second_signature': self.second_signature.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'OrbitComparison':
        return cls(
            same_orbit=bool(data['same_orbit']),
            same_class=bool(data['same_class']),
            compared_traces=int(data.get('compared_traces', 0)),
            first_traces=[parse_rational(v) for v in data.get('first_traces', [])],
            second_traces=[parse_rational(v) for v in data.get('second_traces', [])],
            first_signature=OrbitSignature.from_dict(data['first_signature']),
            second_signature=OrbitSignature.from_dict(data['second_signature']),
        )
