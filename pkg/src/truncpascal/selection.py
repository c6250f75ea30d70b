"""Strictly increasing index selections and the dominance order."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .matrix import DimensionError


class SelectionError(ValueError):
    """Input is not a strictly increasing sequence of naturals."""


class RangeError(ValueError):
    """An index falls outside the ambient range ``0..n``."""


class Selection(tuple):
    """A tuple of naturals certified strictly increasing.

    Being a tuple subclass it hashes, compares and slices like one.
    """

    def __new__(cls, entries: Iterable[int] = ()) -> "Selection":
        items = tuple(entries)
        for v in items:
            if isinstance(v, bool) or not isinstance(v, int):
                raise SelectionError(f"selection entries must be integers, got {v!r}")
            if v < 0:
                raise SelectionError(f"negative index {v}")
        for a, b in zip(items, items[1:]):
            if a >= b:
                raise SelectionError(f"not strictly increasing: {list(items)}")
        return super().__new__(cls, items)

    def __repr__(self) -> str:
        return f"Selection({list(self)})"

    @property
    def last(self) -> int:
        """Largest entry, or -1 for the empty selection."""
        return self[-1] if self else -1


def validate(seq: Iterable[int]) -> Selection:
    return seq if isinstance(seq, Selection) else Selection(seq)


def parse(text: str) -> Selection:
    """Parse ``"0,2,4,7"``; the empty string is the empty selection."""
    text = text.strip()
    if not text:
        return Selection()
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise SelectionError(f"cannot parse selection {text!r}") from exc
    return Selection(values)


def format_selection(sel: Sequence[int]) -> str:
    return ",".join(str(v) for v in sel)


def complement(x: Sequence[int], n: int) -> Selection:
    """Elements of ``0..n`` missing from ``x``, in increasing order."""
    x = validate(x)
    if n < 0:
        raise RangeError(f"n must be natural, got {n}")
    if x and x[-1] > n:
        raise RangeError(f"entry {x[-1]} exceeds n={n}")
    present = set(x)
    return Selection(i for i in range(n + 1) if i not in present)


def _same_length(r: Sequence[int], x: Sequence[int]) -> None:
    if len(r) != len(x):
        raise DimensionError(f"selections differ in length: {len(r)} vs {len(x)}")


def dominates(r: Sequence[int], x: Sequence[int]) -> bool:
    """True iff ``r[i] <= x[i]`` for every position."""
    _same_length(r, x)
    return all(a <= b for a, b in zip(r, x))


def subsets(n: int, size: int) -> Iterator[Selection]:
    for combo in combinations(range(n + 1), size):
        yield Selection(combo)
