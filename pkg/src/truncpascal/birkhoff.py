"""Normalized derivative functionals and the interpolation systems built from them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arithmetic import Scalar, binom, normalize
from .incidence import BoolMatrix2xN
from .matrix import DimensionError, ExactMatrix
from .selection import RangeError, complement, validate


@dataclass(frozen=True)
class Functional:
    """f -> f^(order)(node) / order!"""

    node: Fraction
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "node", Fraction(self.node))
        if self.order < 0:
            raise ValueError(f"derivative order must be natural, got {self.order}")


@dataclass(frozen=True)
class BirkhoffSystem:
    functionals: tuple
    degrees: tuple

    @property
    def is_square(self) -> bool:
        return len(self.functionals) == len(self.degrees)


def apply(f: Functional, degree: int) -> Scalar:
    """Value of ``f`` on the monomial ``t**degree``."""
    if f.order > degree:
        return 0
    return normalize(binom(degree, f.order) * f.node ** (degree - f.order))


def data_map(node: Scalar, orders: Sequence[int]) -> list[Functional]:
    """The functionals at ``node`` for the given derivative orders."""
    return [Functional(Fraction(node), i) for i in orders]


def system_matrix(system: BirkhoffSystem) -> ExactMatrix:
    return ExactMatrix.from_rows(
        [[apply(f, k) for k in system.degrees] for f in system.functionals],
        len(system.degrees),
    )


def extended_system(r: Sequence[int], x: Sequence[int], n: int) -> ExactMatrix:
    """The (n+1)x(n+1) block system with T(r, x) in the upper-left corner.

    Rows: node-1 functionals of orders r, then node-0 functionals of orders
    complement(x).  Columns: monomials of degrees x, then complement(x).
    """
    r, x = validate(r), validate(x)
    if len(r) != len(x):
        raise DimensionError(f"selections differ in length: {len(r)} vs {len(x)}")
    if r and r[-1] > n:
        raise RangeError(f"entry {r[-1]} of r exceeds n={n}")
    xbar = complement(x, n)
    system = BirkhoffSystem(
        tuple(data_map(1, r) + data_map(0, xbar)),
        tuple(x) + tuple(xbar),
    )
    return system_matrix(system)


def system_from_incidence(
    e: BoolMatrix2xN, nodes: tuple[Scalar, Scalar] = (0, 1)
) -> BirkhoffSystem:
    """One functional per 1-entry, row-major; degrees 0..n."""
    functionals = []
    for row, node in enumerate(nodes):
        for j, bit in enumerate(e.bits(row)):
            if bit:
                functionals.append(Functional(Fraction(node), j))
    return BirkhoffSystem(tuple(functionals), tuple(range(e.width)))
