"""Dense exact matrices and fraction-free determinants."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .arithmetic import Scalar, format_scalar, normalize, parse_scalar


class DimensionError(ValueError):
    """Raised when operand shapes do not fit the operation."""


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable row-major matrix of ints and Fractions."""

    n_rows: int
    n_cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.n_rows}x{self.n_cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Scalar]], n_cols: Optional[int] = None) -> "ExactMatrix":
        rows = [list(row) for row in rows]
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != n_cols:
                raise DimensionError("ragged rows")
        flat = tuple(normalize(v) for row in rows for v in row)
        return cls(len(rows), n_cols, flat)

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], size
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(index)
        return self.entries[i * self.n_cols + j]

    def rows(self) -> list[list[Scalar]]:
        c = self.n_cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.n_rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n_cols != other.n_rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.rows(), other.rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.n_cols)) for j in range(other.n_cols)]
            for i in range(self.n_rows)
        ]
        return ExactMatrix.from_rows(out, other.n_cols)

    def __str__(self) -> str:
        return format_matrix(self)


def _require_square(m: ExactMatrix) -> None:
    if not m.is_square:
        raise DimensionError(f"square matrix required, got {m.n_rows}x{m.n_cols}")


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix; ``rows`` is consumed.

    Zero pivots are replaced by the first nonzero entry further down the
    column, negating the sign for the swap.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for p in range(k + 1, n):
                if rows[p][k] != 0:
                    rows[k], rows[p] = rows[p], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            a_ik = row_i[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = (pivot * row_i[j] - a_ik * row_k[j]) // prev
        prev = pivot
    if n == 0:
        return 1
    return sign * rows[n - 1][n - 1]


def det(m: ExactMatrix) -> Fraction:
    """Exact determinant. Rational rows are scaled to integers first."""
    _require_square(m)
    rows = m.rows()
    scale = 1
    for row in rows:
        dens = [v.denominator for v in row if isinstance(v, Fraction)]
        if dens:
            l = math.lcm(*dens)
            scale *= l
            row[:] = [int(v * l) for v in row]
    return Fraction(bareiss_det(rows), scale)


def is_invertible(m: ExactMatrix) -> bool:
    return det(m) != 0


def zero_block_witness(m: ExactMatrix) -> Optional[int]:
    """Smallest ``k`` with rows ``k..d`` x columns ``0..k`` all zero, else None.

    Such a block leaves rows ``k..d`` supported on only ``d - k`` columns,
    so a witness forces a zero determinant.
    """
    _require_square(m)
    size = m.n_rows
    for k in range(size):
        if all(m[i, j] == 0 for i in range(k, size) for j in range(k + 1)):
            return k
    return None


def cofactor_det(m: ExactMatrix) -> Fraction:
    """Laplace expansion along successive rows (independent check for ``det``).

    Minors are memoized by their column set, which keeps the expansion
    tractable up to roughly 12x12.
    """
    _require_square(m)
    n = m.n_rows
    rows = m.rows()
    memo: dict[int, Scalar] = {}

    def expand(row: int, cols: int) -> Scalar:
        if row == n:
            return 1
        if cols in memo:
            return memo[cols]
        total: Scalar = 0
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                if rows[row][j] != 0:
                    total += sign * rows[row][j] * expand(row + 1, cols & ~(1 << j))
                sign = -sign
        memo[cols] = total
        return total

    return Fraction(expand(0, (1 << n) - 1))


def format_matrix(m: ExactMatrix) -> str:
    """Right-aligned grid, one row per line."""
    cells = [[format_scalar(v) for v in row] for row in m.rows()]
    if not cells or m.n_cols == 0:
        return "[]"
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def matrix_to_json(m: ExactMatrix) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in m.rows()]


def matrix_from_json(data: Sequence[Sequence[str]]) -> ExactMatrix:
    return ExactMatrix.from_rows([[parse_scalar(str(v)) for v in row] for row in data])


def dumps(m: ExactMatrix) -> str:
    return json.dumps(matrix_to_json(m))
