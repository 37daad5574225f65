"""Newton polygons of monomial R-ideals in two variables.

A polygon is stored as its chain of vertices from top-left to bottom-right;
the vertical ray above the first vertex and the horizontal ray to the right
of the last are implicit.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .coeffs import representable
from .errors import EmptyIdeal, NegativeComponent, NoLatticeStep, ZeroVector
from .exact_geom import ONE, LineSide, Point, RatLike, line_side, parse_rat


@dataclass(frozen=True)
class MonomialIdeal:
    """Exponent vectors of the monomial generators, kept exactly as supplied."""

    generators: tuple[tuple[int, int], ...]

    def __post_init__(self):
        gens = tuple((int(a), int(b)) for a, b in self.generators)
        if not gens:
            raise EmptyIdeal("monomial ideal needs at least one generator")
        if any(a < 0 or b < 0 for a, b in gens):
            raise ValueError(f"negative exponent in generators {gens}")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class RIdeal:
    """Formal product of monomial ideals raised to positive rational exponents."""

    factors: tuple[tuple[MonomialIdeal, Fraction], ...]

    def __post_init__(self):
        factors = tuple((ideal, parse_rat(lam)) for ideal, lam in self.factors)
        if not factors:
            raise EmptyIdeal("R-ideal needs at least one factor")
        for _, lam in factors:
            if lam <= 0:
                raise ValueError(f"exponents must be positive, got {lam}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *pairs) -> "RIdeal":
        """``RIdeal.of(([(4, 0), (0, 1)], "5/4"), ...)``"""
        return cls(tuple((MonomialIdeal(tuple(g)), lam) for g, lam in pairs))

    @property
    def exponents(self) -> list[Fraction]:
        return [lam for _, lam in self.factors]

    def reflect(self) -> "RIdeal":
        return RIdeal(tuple(
            (MonomialIdeal(tuple((b, a) for a, b in ideal.generators)), lam)
            for ideal, lam in self.factors
        ))

    def max_coordinate(self) -> int:
        return max(max(g) for ideal, _ in self.factors for g in ideal.generators)


@dataclass(frozen=True)
class Facet:
    top: Point
    bottom: Point

    def __post_init__(self):
        if not (self.top.y > self.bottom.y and self.top.x < self.bottom.x):
            raise ValueError(f"{self.top} -> {self.bottom} is not a compact facet")

    @property
    def normal(self) -> tuple[Fraction, Fraction]:
        """Inner normal ``(drop in y, gain in x)``; both components positive."""
        return (self.top.y - self.bottom.y, self.bottom.x - self.top.x)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = tuple(v if isinstance(v, Point) else Point(*v) for v in self.vertices)
        if not vs:
            raise EmptyIdeal("polygon needs at least one vertex")
        for a, b in zip(vs, vs[1:]):
            if not (a.x < b.x and a.y > b.y):
                raise ValueError(f"vertices {a}, {b} are not a descending chain")
        for a, b, c in zip(vs, vs[1:], vs[2:]):
            if _cross(a, b, c) <= 0:
                raise ValueError(f"vertex {b} is not in convex position")
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"NewtonPolygon({list(self.vertices)!r})"

    def facets(self) -> list[Facet]:
        return [Facet(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def contains(self, q: Point) -> bool:
        vs = self.vertices
        if q.x < vs[0].x or q.y < vs[-1].y:
            return False
        return all(line_side(a, b, q) != LineSide.MINUS for a, b in zip(vs, vs[1:]))

    def is_convenient(self) -> bool:
        return self.vertices[0].x == 0 and self.vertices[-1].y == 0


def polygon_of_points(points: Iterable) -> NewtonPolygon:
    """Vertex chain of ``conv(points + R^2_{>=0})``."""
    pts = sorted({p if isinstance(p, Point) else Point(*p) for p in points})
    if not pts:
        raise EmptyIdeal("no points given")
    # staircase: keep points strictly lower than everything to their left
    stair: list[Point] = []
    for p in pts:
        if not stair or p.y < stair[-1].y:
            stair.append(p)
    hull: list[Point] = []
    for p in stair:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return NewtonPolygon(tuple(hull))


def polygon_of_ideal(ideal: MonomialIdeal) -> NewtonPolygon:
    return polygon_of_points(ideal.generators)


def scale(poly: NewtonPolygon, lam: RatLike) -> NewtonPolygon:
    lam = parse_rat(lam)
    return NewtonPolygon(tuple(Point(v.x * lam, v.y * lam) for v in poly.vertices))


def minkowski_sum(polys: Sequence[NewtonPolygon]) -> NewtonPolygon:
    """Minkowski sum of polygons by merging their edges in slope order."""
    start_x = sum(p.vertices[0].x for p in polys)
    start_y = sum(p.vertices[0].y for p in polys)
    # edge slopes dy/dx increase along each chain, so a k-way merge suffices
    chains = [
        [((b.y - a.y) / (b.x - a.x), b.x - a.x, b.y - a.y)
         for a, b in zip(p.vertices, p.vertices[1:])]
        for p in polys
    ]
    pts = [Point(start_x, start_y)]
    x, y = start_x, start_y
    for _, dx, dy in heapq.merge(*chains, key=lambda e: e[0]):
        x, y = x + dx, y + dy
        pts.append(Point(x, y))
    # collinear consecutive edges are merged by the hull pass
    return polygon_of_points(pts)


def weighted_minkowski_sum(rideal: RIdeal) -> NewtonPolygon:
    return minkowski_sum([scale(polygon_of_ideal(ideal), lam) for ideal, lam in rideal.factors])


def contains_one(poly: NewtonPolygon) -> bool:
    return poly.contains(ONE)


def support(poly: NewtonPolygon, p) -> Fraction:
    """``min <p, q>`` over the polygon, attained at a vertex for ``p >= 0``."""
    px, py = (parse_rat(c) for c in p)
    if px < 0 or py < 0:
        raise NegativeComponent(f"direction {(px, py)} has a negative component")
    if px == 0 and py == 0:
        raise ZeroVector("direction must be nonzero")
    return min(px * v.x + py * v.y for v in poly.vertices)


def _minimal_alpha(u: tuple[Fraction, Fraction]) -> Fraction:
    """Least ``alpha > 0`` with ``alpha * u`` integral (``u`` has no zero entry).

    ``alpha * n/d`` is an integer iff ``alpha`` is in ``(d/|n|) Z``; the
    intersection of two such rational lattices is generated by
    ``lcm(numerators) / gcd(denominators)`` after reducing ``d/|n|``.
    """
    steps = [Fraction(c.denominator, abs(c.numerator)) for c in u]
    num = math.lcm(*(s.numerator for s in steps))
    den = math.gcd(*(s.denominator for s in steps))
    return Fraction(num, den)


def facet_lattice_step(facet: Facet, exponents: Sequence[RatLike]):
    """Return ``(j, alpha, step)`` for the facet.

    ``j`` is a 0-based index into ``exponents``, ``alpha`` in (0, 1] the least
    positive scale with ``alpha * (top - bottom) / lambda_j`` integral and
    ``step = alpha * normal / lambda_j``, a pair of positive integers.
    Among admissible ``j`` the one with the smallest ``step`` sum wins, then
    the smallest index.
    """
    diff = (facet.top.x - facet.bottom.x, facet.top.y - facet.bottom.y)
    nx, ny = facet.normal
    best = None
    for j, lam in enumerate(parse_rat(x) for x in exponents):
        alpha = _minimal_alpha((diff[0] / lam, diff[1] / lam))
        if alpha > 1:
            continue
        step = (alpha * nx / lam, alpha * ny / lam)
        key = (step[0] + step[1], j)
        if best is None or key < best[0]:
            best = (key, j, alpha, (int(step[0]), int(step[1])))
    if best is None:
        raise NoLatticeStep(f"no exponent in {list(exponents)} gives a lattice step on {facet}")
    return best[1], best[2], best[3]


def make_convenient(rideal: RIdeal, m: int) -> RIdeal:
    """Add ``x^m`` and ``y^m`` to every factor so the polygon meets both axes."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    return RIdeal(tuple(
        (MonomialIdeal(ideal.generators + ((m, 0), (0, m))), lam)
        for ideal, lam in rideal.factors
    ))


def reflect(poly: NewtonPolygon) -> NewtonPolygon:
    return NewtonPolygon(tuple(v.swap() for v in reversed(poly.vertices)))


def vertex_representable(v: Point, values: Iterable[RatLike]) -> bool:
    vals = list(values)
    return representable(v.x, vals) and representable(v.y, vals)
