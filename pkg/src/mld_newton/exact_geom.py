"""Exact rational scalars, points in the closed positive quadrant and the
few orientation predicates the witness construction needs.

Everything is built on :class:`fractions.Fraction`; no floats enter here.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateLine, NonPositiveLambda, VerticalLine

Rat = Fraction
RatLike = Union[int, Fraction, str]

_RAT_RE = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


def parse_rat(value: RatLike) -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or a plain int into a Fraction.

    Floats are rejected on purpose: they would silently lose exactness.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and _RAT_RE.match(value):
        return Fraction(value.replace(" ", ""))
    raise ValueError(f"not a rational: {value!r}")


def fmt_rat(value: Fraction) -> str:
    return str(Fraction(value))


def lcm_of_denominators(*values: Fraction) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, Fraction(v).denominator)
    return d


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if self.x < 0 or self.y < 0:
            raise ValueError(f"point {self} has a negative coordinate")

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"({fmt_rat(self.x)}, {fmt_rat(self.y)})"

    def swap(self) -> "Point":
        return Point(self.y, self.x)


ONE = Point(1, 1)


class LineSide(enum.Enum):
    PLUS = "+"
    ON = "0"
    MINUS = "-"


def line_side(a: Point, b: Point, q: Point) -> LineSide:
    """Position of ``q`` relative to the non-vertical line through ``a`` and ``b``.

    PLUS means strictly above the line at abscissa ``q.x``, MINUS strictly below.
    """
    if a == b:
        raise DegenerateLine(f"line through a single point {a}")
    if a.x == b.x:
        raise VerticalLine(f"line through {a} and {b} is vertical")
    # q.y - line(q.x), scaled by (b.x - a.x); flip sign when b is left of a.
    cross = (q.y - a.y) * (b.x - a.x) - (b.y - a.y) * (q.x - a.x)
    if b.x < a.x:
        cross = -cross
    if cross > 0:
        return LineSide.PLUS
    if cross < 0:
        return LineSide.MINUS
    return LineSide.ON


def in_triangle(q: Point) -> bool:
    """Membership in the triangle ``{x, y >= 0, y <= 2 - x}``."""
    return q.y <= 2 - q.x


def _check_lambda(lam: Fraction) -> Fraction:
    lam = Fraction(lam)
    if lam <= 0:
        raise NonPositiveLambda(f"lambda must be positive, got {lam}")
    return lam


def floor_lambda(a: RatLike, lam: RatLike) -> Fraction:
    """Largest integer multiple of ``lam`` that is ``<= a``."""
    lam = _check_lambda(parse_rat(lam))
    return math.floor(parse_rat(a) / lam) * lam


def ceil_lambda(a: RatLike, lam: RatLike) -> Fraction:
    """Smallest integer multiple of ``lam`` that is ``>= a``."""
    lam = _check_lambda(parse_rat(lam))
    return math.ceil(parse_rat(a) / lam) * lam
