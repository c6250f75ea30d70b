"""Two-row incidence matrices, the Pólya condition and the sum-dot algebra.

Rows are stored as packed ints: bit ``j`` of ``row0``/``row1`` is the entry
in column ``j``.  Row 0 belongs to node 0 and row 1 to node 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .matrix import DimensionError
from .selection import RangeError, complement, validate


class IncidenceError(ValueError):
    """A boolean matrix does not carry exactly ``n + 1`` ones."""


class ConstructionError(RuntimeError):
    """The decomposition could not find an entry it needs to exchange."""


def _mask(width: int) -> int:
    return (1 << width) - 1


def _bits(seq: Sequence[int]) -> int:
    word = 0
    for j, b in enumerate(seq):
        if b not in (0, 1, True, False):
            raise ValueError(f"entries must be 0 or 1, got {b!r}")
        if b:
            word |= 1 << j
    return word


def _set_positions(word: int) -> list[int]:
    out = []
    j = 0
    while word:
        if word & 1:
            out.append(j)
        word >>= 1
        j += 1
    return out


@dataclass(frozen=True)
class BoolMatrix2xN:
    """A 2 x (n+1) zero-one matrix."""

    n: int
    row0: int
    row1: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DimensionError(f"n must be natural, got {self.n}")
        full = _mask(self.width)
        if self.row0 & ~full or self.row1 & ~full or self.row0 < 0 or self.row1 < 0:
            raise DimensionError(f"row bits exceed width {self.width}")

    @classmethod
    def from_rows(cls, row0: Sequence[int], row1: Sequence[int]) -> "BoolMatrix2xN":
        if len(row0) != len(row1) or not row0:
            raise DimensionError(f"rows must be nonempty and equal length: {len(row0)} vs {len(row1)}")
        return cls(len(row0) - 1, _bits(row0), _bits(row1))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix2xN":
        """Unit for sum-dot: zeros on row 0, ones on row 1."""
        return cls(n, 0, _mask(n + 1))

    @property
    def width(self) -> int:
        return self.n + 1

    def bits(self, row: int) -> list[int]:
        word = self.row0 if row == 0 else self.row1
        return [word >> j & 1 for j in range(self.width)]

    def to_lists(self) -> list[list[int]]:
        return [self.bits(0), self.bits(1)]

    def ones(self) -> int:
        return self.row0.bit_count() + self.row1.bit_count()

    def is_incidence(self) -> bool:
        return self.ones() == self.width

    def as_incidence(self) -> "IncidenceMatrix":
        return IncidenceMatrix(self.n, self.row0, self.row1)

    def __str__(self) -> str:
        return "\n".join("".join(map(str, self.bits(i))) for i in (0, 1))


@dataclass(frozen=True)
class IncidenceMatrix(BoolMatrix2xN):
    """A BoolMatrix2xN with exactly ``n + 1`` ones."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_incidence():
            raise IncidenceError(
                f"incidence matrix needs exactly {self.width} ones, found {self.ones()}"
            )

    @classmethod
    def identity(cls, n: int) -> "IncidenceMatrix":
        return cls(n, 0, _mask(n + 1))


def parse(text: str) -> BoolMatrix2xN:
    """Parse ``"010100/101101"`` (row 0, slash, row 1)."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise ValueError(f"expected two 0/1 rows joined by '/', got {text!r}")
    rows = []
    for part in parts:
        part = part.strip()
        if not part or set(part) - {"0", "1"}:
            raise ValueError(f"malformed row {part!r}")
        rows.append([int(c) for c in part])
    return BoolMatrix2xN.from_rows(*rows)


def format_compact(e: BoolMatrix2xN) -> str:
    return "/".join("".join(map(str, e.bits(i))) for i in (0, 1))


def cumulative_sums(e: BoolMatrix2xN) -> list[int]:
    """M_j = number of ones in columns 0..j."""
    out = []
    total = 0
    for j in range(e.width):
        total += (e.row0 >> j & 1) + (e.row1 >> j & 1)
        out.append(total)
    return out


def is_polya(e: BoolMatrix2xN) -> bool:
    """M_j > j for every column j."""
    total = 0
    for j in range(e.width):
        total += (e.row0 >> j & 1) + (e.row1 >> j & 1)
        if total <= j:
            return False
    return True


def _same_width(e1: BoolMatrix2xN, e2: BoolMatrix2xN) -> None:
    if e1.n != e2.n:
        raise DimensionError(f"widths differ: {e1.width} vs {e2.width}")


def sum_dot(e1: BoolMatrix2xN, e2: BoolMatrix2xN) -> BoolMatrix2xN:
    """OR the first rows, AND the second rows."""
    _same_width(e1, e2)
    return BoolMatrix2xN(e1.n, e1.row0 | e2.row0, e1.row1 & e2.row1)


def sum_dot_is_incidence(e1: IncidenceMatrix, e2: IncidenceMatrix) -> bool:
    """Count criterion: |row0 AND row0'| == |NOT row1 AND NOT row1'|.

    The direct ones-count of the sum-dot is computed as well and the two
    answers must agree.
    """
    _same_width(e1, e2)
    full = _mask(e1.width)
    lhs = (e1.row0 & e2.row0).bit_count()
    rhs = (~e1.row1 & ~e2.row1 & full).bit_count()
    verdict = lhs == rhs
    direct = sum_dot(e1, e2).is_incidence()
    if verdict != direct:
        raise AssertionError(
            f"count criterion {verdict} disagrees with direct count {direct} "
            f"for {format_compact(e1)} and {format_compact(e2)}"
        )
    return verdict


def decompose(e: IncidenceMatrix) -> tuple[IncidenceMatrix, IncidenceMatrix]:
    """Split ``e`` into two incidence matrices whose sum-dot is ``e``.

    With d ones in row 0: the first part moves the lowest row-0 one onto the
    lowest row-1 zero; the second moves the highest d-1 row-0 ones onto the
    highest d-1 row-1 zeros.
    """
    if not e.is_incidence():
        raise IncidenceError("decompose needs an incidence matrix")
    full = _mask(e.width)
    ones0 = _set_positions(e.row0)
    zeros1 = _set_positions(~e.row1 & full)
    d = len(ones0)
    if d == 0:
        return e.identity(e.n), e.identity(e.n)
    if len(zeros1) < d:
        raise ConstructionError(
            f"row 1 has {len(zeros1)} zeros but {d} exchanges are required"
        )

    first_one, first_zero = ones0[0], zeros1[0]
    e1 = IncidenceMatrix(e.n, e.row0 & ~(1 << first_one), e.row1 | (1 << first_zero))

    row0, row1 = e.row0, e.row1
    for j in ones0[1:]:
        row0 &= ~(1 << j)
    for j in zeros1[len(zeros1) - (d - 1):]:
        row1 |= 1 << j
    e2 = IncidenceMatrix(e.n, row0, row1)
    return e1, e2


def key(m: BoolMatrix2xN) -> tuple[int, int, int]:
    """Content key, so plain and certified matrices compare equal."""
    return m.n, m.row0, m.row1


def _zeros1(m: BoolMatrix2xN) -> int:
    return (~m.row1 & _mask(m.width)).bit_count()


def decomposition_violations(
    e: IncidenceMatrix, e1: BoolMatrix2xN, e2: BoolMatrix2xN
) -> list[str]:
    """Names of the decomposition guarantees that fail for (e, e1, e2)."""
    failed = []
    ident = BoolMatrix2xN.identity(e.n)
    d = e.row0.bit_count()

    if key(sum_dot(e1, e2)) != key(e):
        failed.append("reassembly")
    if not (e1.is_incidence() and e2.is_incidence()):
        failed.append("parts_incidence")
    if is_polya(e) and not (is_polya(e1) and is_polya(e2)):
        failed.append("polya_inherited")
    if d != e1.row0.bit_count() + e2.row0.bit_count():
        failed.append("row0_count_additive")
    if _zeros1(e) != _zeros1(e1) + _zeros1(e2):
        failed.append("row1_zero_count_additive")
    if d == 0 and not (key(e) == key(e1) == key(e2) == key(ident)):
        failed.append("case_d0_identity")
    if d == 1 and not (key(e1) == key(ident) and key(e2) == key(e)):
        failed.append("case_d1")
    if d > 1 and len({key(e), key(e1), key(e2)}) != 3:
        failed.append("case_distinct")
    return failed


def from_selection(r: Sequence[int], x: Sequence[int], n: int) -> IncidenceMatrix:
    """Incidence matrix with node-0 orders at the complement of x, node-1 orders at r."""
    r, x = validate(r), validate(x)
    if len(r) != len(x):
        raise DimensionError(f"selections differ in length: {len(r)} vs {len(x)}")
    if r and r[-1] > n:
        raise RangeError(f"entry {r[-1]} of r exceeds n={n}")
    xbar = complement(x, n)
    return IncidenceMatrix(n, _bits_at(xbar), _bits_at(r))


def _bits_at(positions: Sequence[int]) -> int:
    word = 0
    for p in positions:
        word |= 1 << p
    return word


def enumerate_incidence(n: int) -> Iterator[IncidenceMatrix]:
    """All C(2n+2, n+1) incidence matrices of width n+1, in a fixed order.

    Cells are numbered row-major (row 0 columns first) and the set of
    one-cells runs through ``itertools.combinations`` order.
    """
    width = n + 1
    for cells in combinations(range(2 * width), width):
        row0 = row1 = 0
        for c in cells:
            if c < width:
                row0 |= 1 << c
            else:
                row1 |= 1 << (c - width)
        yield IncidenceMatrix(n, row0, row1)
