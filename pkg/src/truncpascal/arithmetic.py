"""Exact scalar helpers.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and immutable, so nothing here needs a wrapper
class.  Binomials follow the convention ``binom(j, i) == 0`` for ``i > j``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

ExactInt = int
ExactRational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "ExactInt",
    "ExactRational",
    "Scalar",
    "binom",
    "factorial",
    "format_scalar",
    "normalize",
    "parse_scalar",
]


def _check_natural(value: int, name: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a natural number, got {value!r}")


def binom(j: int, i: int) -> int:
    """Binomial coefficient C(j, i), zero when ``i > j``."""
    _check_natural(j, "j")
    _check_natural(i, "i")
    return math.comb(j, i)


def factorial(i: int) -> int:
    _check_natural(i, "i")
    return math.factorial(i)


def normalize(value: Scalar) -> Scalar:
    """Collapse integral rationals to ``int`` so integer fast paths apply."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an exact scalar, got {type(value).__name__}")
    return value


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p"`` or ``"p/q"`` decimal text into an exact scalar."""
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal points and exponents are not exact syntax: {text!r}")
    return normalize(value)


def format_scalar(value: Scalar) -> str:
    return str(normalize(value))
