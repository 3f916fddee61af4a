"""
Moment sequences and Hermitian matrix input.

A moment sequence holds t_k = sum over roots (with weights) of p^k. For a
characteristic polynomial the weights are the multiplicities, so t_0 = n.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from hermspec.exact.exceptions import NotHermitianError, NotSquareError, ParseError
from hermspec.exact.scalars import ComplexExact
from hermspec.utils.type_conversion import parse_rational_list, rational_list


@dataclass(frozen=True)
class MomentSeq:
    """Exact moment sequence t_0, t_1, ... with the degree of its source."""

    values: Tuple[Fraction, ...]
    source_degree: int

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(Fraction(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    @classmethod
    def from_values(cls, values: Sequence[Any]) -> 'MomentSeq':
        """
        Build a sequence from raw moments, reading the source degree from t_0.

        Raises:
            ParseError: If the list is empty or t_0 is not a nonnegative integer
        """
        parsed = parse_rational_list(values)
        if not parsed:
            raise ParseError("moment sequence is empty")
        t0 = parsed[0]
        if t0.denominator != 1 or t0 < 0:
            raise ParseError(f"t_0 must be a nonnegative integer weight, got {t0}")
        return cls(tuple(parsed), int(t0))

    def to_dict(self) -> Dict[str, Any]:
        return {'values': rational_list(self.values), 'source_degree': self.source_degree}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MomentSeq':
        return cls(tuple(parse_rational_list(data.get('values', []))), int(data.get('source_degree', 0)))


@dataclass(frozen=True)
class HermitianInput:
    """
    Square matrix of complex rationals, validated Hermitian on construction.

    Raises:
        NotSquareError: If rows have different lengths than the row count
        NotHermitianError: If entry (i, j) is not the conjugate of entry (j, i)
    """

    entries: Tuple[Tuple[ComplexExact, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(ComplexExact.parse(v) for v in row) for row in self.entries)
        size = len(rows)
        for i, row in enumerate(rows):
            if len(row) != size:
                raise NotSquareError(f"matrix row {i} has {len(row)} entries, expected {size}")
        for i in range(size):
            for j in range(i, size):
                if rows[i][j] != rows[j][i].conjugate():
                    raise NotHermitianError(
                        f"entry ({i}, {j}) = {rows[i][j]} is not the conjugate of entry ({j}, {i}) = {rows[j][i]}",
                        {'row': i, 'col': j},
                    )
        object.__setattr__(self, 'entries', rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> 'HermitianInput':
        """Parse rows of [re, im] pairs or bare rationals."""
        if not isinstance(rows, (list, tuple)) or any(not isinstance(r, (list, tuple)) for r in rows):
            raise ParseError("matrix must be a list of rows")
        return cls(tuple(tuple(ComplexExact.parse(v) for v in row) for row in rows))

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> 'HermitianInput':
        """Real diagonal matrix."""
        parsed = parse_rational_list(values)
        size = len(parsed)
        return cls(tuple(
            tuple(ComplexExact(parsed[i] if i == j else 0) for j in range(size))
            for i in range(size)
        ))

    def to_dict(self) -> Dict[str, Any]:
        return {'matrix': [[rational_list((e.re, e.im)) for e in row] for row in self.entries]}

    def to_lists(self) -> List[List[ComplexExact]]:
        return [list(row) for row in self.entries]
