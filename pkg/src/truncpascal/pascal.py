"""Truncated Pascal matrices T(r, x) with entries C(x_j, r_i)."""
from __future__ import annotations

from typing import Sequence

from .arithmetic import binom
from .matrix import DimensionError, ExactMatrix
from .selection import dominates, validate


def truncated(r: Sequence[int], x: Sequence[int]) -> ExactMatrix:
    """Rows ``r`` and columns ``x`` of the upper-triangular Pascal matrix.

    Rectangular selections are allowed for inspection; the invertibility
    helpers below insist on ``len(r) == len(x)``.
    """
    r, x = validate(r), validate(x)
    return ExactMatrix.from_rows([[binom(xj, ri) for xj in x] for ri in r], len(x))


def leading(n: int) -> ExactMatrix:
    """T(0:n, 0:n)."""
    full = range(n + 1)
    return truncated(full, full)


def diagonal(r: Sequence[int], x: Sequence[int]) -> list[int]:
    r, x = validate(r), validate(x)
    if len(r) != len(x):
        raise DimensionError(f"selections differ in length: {len(r)} vs {len(x)}")
    return [binom(xk, rk) for rk, xk in zip(r, x)]


def diagonal_all_nonzero(r: Sequence[int], x: Sequence[int]) -> bool:
    return all(diagonal(r, x))


def is_invertible_fast(r: Sequence[int], x: Sequence[int]) -> bool:
    """Invertibility of T(r, x) by the dominance test alone, no determinant."""
    return dominates(validate(r), validate(x))
