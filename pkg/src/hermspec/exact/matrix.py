"""
Exact linear algebra over the rationals.

Determinants and ranks run fraction-free (Bareiss) on an integer copy of the
matrix; each row is scaled by the lcm of its denominators first, and the
scale factors are divided back out at the end. Rank is always obtained by a
full reduction, never from leading principal minors.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Sequence, Tuple

from hermspec.exact.exceptions import NotSquareError, SingularMatrixError


def _lcm(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable row-major matrix of rationals."""

    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, 'entries', rows)

    @classmethod
    def identity(cls, size: int) -> 'ExactMatrix':
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def _integer_rows(self) -> Tuple[List[List[int]], int]:
        """Integer rows plus the product of the row scale factors."""
        grid = []
        total_scale = 1
        for row in self.entries:
            scale = _lcm(v.denominator for v in row)
            grid.append([v.numerator * (scale // v.denominator) for v in row])
            total_scale *= scale
        return grid, total_scale


def _bareiss_reduce(grid: List[List[int]]) -> Tuple[int, int, int]:
    """
    In-place fraction-free row reduction with row pivoting.

    Returns (rank, sign, last_pivot). For a square full-rank matrix
    sign * last_pivot is the determinant.
    """
    n_rows = len(grid)
    n_cols = len(grid[0]) if grid else 0
    sign = 1
    prev = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if grid[r][col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            grid[rank], grid[pivot_row] = grid[pivot_row], grid[rank]
            sign = -sign
        pivot = grid[rank][col]
        for r in range(rank + 1, n_rows):
            lead = grid[r][col]
            row = grid[r]
            top = grid[rank]
            for c in range(col + 1, n_cols):
                row[c] = (pivot * row[c] - lead * top[c]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
    return rank, sign, prev


def det_exact(matrix: ExactMatrix) -> Fraction:
    """
    Exact determinant by Bareiss elimination.

    The empty matrix has determinant 1.

    Raises:
        NotSquareError: If the matrix is not square
    """
    if not matrix.is_square:
        raise NotSquareError(f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}")
    if matrix.rows == 0:
        return Fraction(1)
    grid, scale = matrix._integer_rows()
    rank, sign, last = _bareiss_reduce(grid)
    if rank < matrix.rows:
        return Fraction(0)
    return Fraction(sign * last, scale)


def rank_exact(matrix: ExactMatrix) -> int:
    """Rank over Q by full fraction-free row reduction."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    grid, _ = matrix._integer_rows()
    rank, _, _ = _bareiss_reduce(grid)
    return rank


def solve_exact(matrix: ExactMatrix, rhs: Sequence[Fraction]) -> List[Fraction]:
    """
    Solve matrix * x = rhs by Gauss-Jordan elimination over Q.

    Raises:
        NotSquareError: If the matrix is not square
        SingularMatrixError: If the matrix is singular
    """
    if not matrix.is_square:
        raise NotSquareError(f"solve needs a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    if len(rhs) != n:
        raise ValueError(f"right-hand side has length {len(rhs)}, expected {n}")
    aug = [list(row) + [Fraction(b)] for row, b in zip(matrix.entries, rhs)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(f"singular {n}x{n} matrix (no pivot in column {col})")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [v / pivot for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def inverse_exact(matrix: ExactMatrix) -> ExactMatrix:
    """Exact inverse, column by column."""
    n = matrix.rows
    columns = [solve_exact(matrix, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return ExactMatrix(tuple(tuple(columns[j][i] for j in range(n)) for i in range(n)))


def hankel_matrix(values: Sequence[Fraction], size: int, offset: int = 0) -> ExactMatrix:
    """size x size Hankel matrix with entry (i, j) = values[offset + i + j]."""
    return ExactMatrix(tuple(tuple(values[offset + i + j] for j in range(size)) for i in range(size)))
