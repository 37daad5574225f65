"""Log discrepancies of toric divisors and the brute-force lattice oracle.

The divisor ``E_p`` for ``p`` in ``Z^2_{>=1}`` has log discrepancy
``p_x + p_y - <p, Gamma>``.  The oracle evaluates that on every lattice
vector inside a taxicab radius.  Vectorised evaluation clears denominators
first, so the numpy path stays in exact integer arithmetic; when the scaled
values might overflow int64 it switches to Python integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NoComputingDivisorInRadius, RadiusTooSmall
from .exact_geom import fmt_rat, lcm_of_denominators
from .newton import NewtonPolygon, contains_one, support

_INT64_SAFE = 2**62


@dataclass(frozen=True, order=True)
class Divisor:
    px: int
    py: int

    def __post_init__(self):
        if self.px < 1 or self.py < 1:
            raise ValueError(f"divisor vector ({self.px}, {self.py}) must be in Z^2_>=1")

    def __iter__(self):
        yield self.px
        yield self.py

    @property
    def logdisc(self) -> int:
        """``k_E + 1`` for the toric divisor, i.e. ``p_x + p_y``."""
        return self.px + self.py

    def swap(self) -> "Divisor":
        return Divisor(self.py, self.px)


@dataclass(frozen=True)
class MldValue:
    """Either a nonnegative rational or minus infinity (``value is None``)."""

    value: Fraction | None

    @classmethod
    def minus_infinity(cls) -> "MldValue":
        return cls(None)

    @property
    def is_minus_infinity(self) -> bool:
        return self.value is None

    def __str__(self):
        return "-inf" if self.value is None else fmt_rat(self.value)


@dataclass(frozen=True)
class OracleReport:
    radius: int
    min_value: Fraction
    argmins: tuple[Divisor, ...] = field(default=())
    any_negative: bool = False

    def to_json(self) -> dict:
        return {
            "radius": self.radius,
            "min_value": fmt_rat(self.min_value),
            "argmins": [list(p) for p in self.argmins],
            "any_negative": self.any_negative,
        }


def log_discrepancy(poly: NewtonPolygon, p) -> Fraction:
    px, py = p
    return px + py - support(poly, (px, py))


def _scaled_vertices(poly: NewtonPolygon):
    d = lcm_of_denominators(*(c for v in poly.vertices for c in v))
    return d, [(int(v.x * d), int(v.y * d)) for v in poly.vertices]


def scaled_values(poly: NewtonPolygon, px: np.ndarray, py: np.ndarray):
    """Return ``(num, d)`` with ``num / d`` the log discrepancy at each ``(px, py)``."""
    d, verts = _scaled_vertices(poly)
    top = max([d] + [max(vx, vy) for vx, vy in verts])
    reach = int(px.max(initial=0)) + int(py.max(initial=0))
    if top * reach * 2 >= _INT64_SAFE:
        px, py = px.astype(object), py.astype(object)
    else:
        px, py = px.astype(np.int64), py.astype(np.int64)
    val = None
    for vx, vy in verts:
        cur = px * vx + py * vy
        val = cur if val is None else np.minimum(val, cur)
    return d * (px + py) - val, d


def taxicab_grid(radius: int):
    """All ``p`` in ``Z^2_{>=1}`` with ``p_x + p_y <= radius``, ordered by sum then lexicographically."""
    xs, ys = [], []
    for s in range(2, radius + 1):
        xs.extend(range(1, s))
        ys.extend(range(s - 1, 0, -1))
    return np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64)


def brute_force_oracle(poly: NewtonPolygon, radius: int) -> OracleReport:
    if radius < 2:
        raise RadiusTooSmall(f"radius must be at least 2, got {radius}")
    px, py = taxicab_grid(radius)
    num, d = scaled_values(poly, px, py)
    lo = num.min()
    idx = np.flatnonzero(num == lo)
    argmins = sorted(Divisor(int(px[i]), int(py[i])) for i in idx)
    return OracleReport(
        radius=radius,
        min_value=Fraction(int(lo), d),
        argmins=tuple(argmins),
        any_negative=bool(lo < 0),
    )


def box_minimum(poly: NewtonPolygon, nx: int, ny: int) -> tuple[Fraction, Divisor]:
    """Exact minimum over ``[1..nx] x [1..ny]`` and its lexicographically smallest argmin."""
    gx, gy = np.meshgrid(np.arange(1, nx + 1), np.arange(1, ny + 1), indexing="ij")
    px, py = gx.ravel(), gy.ravel()
    num, d = scaled_values(poly, px, py)
    # row-major over (px, py) means the first hit is the lexicographic minimum
    i = int(np.argmin(num))
    return Fraction(int(num[i]), d), Divisor(int(px[i]), int(py[i]))


def minimal_computing_logdisc(poly: NewtonPolygon, radius: int) -> tuple[int, Divisor]:
    """Smallest ``p_x + p_y`` over divisors within ``radius`` that compute the mld.

    Computing means attaining the minimum when the polygon contains ``(1, 1)``
    and having negative log discrepancy otherwise.
    """
    if radius < 2:
        raise RadiusTooSmall(f"radius must be at least 2, got {radius}")
    px, py = taxicab_grid(radius)
    num, _ = scaled_values(poly, px, py)
    hits = num == num.min() if contains_one(poly) else num < 0
    idx = np.flatnonzero(hits)
    if idx.size == 0:
        raise NoComputingDivisorInRadius(f"no computing divisor with p_x + p_y <= {radius}")
    i = int(idx[0])
    p = Divisor(int(px[i]), int(py[i]))
    return p.logdisc, p
