"""Constructive witnesses: a toric divisor that computes the mld, found within
the explicit bound determined by the exponent set.

Nonnegative branch: split the vertices into the zones
``A = [0,1] x (1,inf)``, ``B = [0,1]^2`` and ``C = (1,inf) x [0,1]``.  Either
``E_(1,1)`` already computes the mld, or (after possibly reflecting) the facet
leaving zone A has a primitive lattice step ``b'`` and some computing divisor
lies in the box ``[1..b'_x] x [1..b'_y]``; its exact minimum is returned.

Minus-infinity branch: make the polygon convenient, locate the first facet
whose line passes strictly above ``(1,1)`` starting from a vertex of the
triangle ``y <= 2 - x``, and slide the far end of that facet left in steps of
the exponent while ``(1,1)`` stays strictly below.  The inner normal of the
final segment, divided by the exponent, is the witness.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .coeffs import bound_minus_inf, bound_nonneg, coefficient_set, gamma_of
from .errors import PolygonContainsOne, PolygonWithoutOne, ProofInvariantViolated
from .exact_geom import ONE, LineSide, Point, RatLike, in_triangle, line_side
from .mld_core import Divisor, MldValue, box_minimum, log_discrepancy
from .newton import (
    Facet,
    NewtonPolygon,
    RIdeal,
    contains_one,
    facet_lattice_step,
    make_convenient,
    reflect,
    support,
    weighted_minkowski_sum,
)

log = logging.getLogger(__name__)

MAX_CONVENIENT_RETRIES = 64


@dataclass(frozen=True)
class CaseTag:
    """``kind`` is ``"one"``, ``"two"`` or ``"minus_inf"``."""

    kind: str
    reflected: bool = False
    n: int = 0


@dataclass(frozen=True)
class WitnessResult:
    mld: MldValue
    divisor: Divisor
    logdisc: int
    bound: int
    case: CaseTag

    def to_json(self) -> dict:
        return {
            "mld": str(self.mld),
            "divisor": list(self.divisor),
            "logdisc": self.logdisc,
            "bound": self.bound,
            "case": self.case.kind,
            "reflected": self.case.reflected,
        }


def _check(cond: bool, what: str):
    if not cond:
        raise ProofInvariantViolated(what)


def invariants_for(rideal: RIdeal, declared_I: Optional[Iterable[RatLike]] = None):
    """``(e, gamma)`` of the exponent set, or of ``declared_I`` when supplied."""
    exps = coefficient_set(rideal.exponents)
    if declared_I is not None:
        declared = coefficient_set(declared_I)
        missing = [x for x in exps if x not in declared]
        if missing:
            raise ValueError(f"declared_I is missing exponents {[str(x) for x in missing]}")
        exps = declared
    g = gamma_of(exps)
    return g.e, g.gamma


def _normal_ratio_vs_one(poly: NewtonPolygon, i: int) -> int:
    """Sign of ``ratio(b_i) - 1`` where ``b_i`` joins vertices ``i`` and ``i+1`` (1-based).

    ``b_0`` and ``b_k`` are the rays at infinity, with ratios 0 and +inf.
    """
    k = len(poly.vertices)
    if i == 0:
        return -1
    if i == k:
        return 1
    dy, dx = Facet(poly.vertices[i - 1], poly.vertices[i]).normal
    return (dx > dy) - (dx < dy)


def classify(poly: NewtonPolygon) -> CaseTag:
    if not contains_one(poly):
        raise PolygonWithoutOne(f"{poly} does not contain (1, 1)")
    vs = poly.vertices
    n = sum(1 for v in vs if v.x <= 1 and v.y > 1)
    m = sum(1 for v in vs if v.x <= 1 and v.y <= 1)
    t = len(vs) - n - m
    _check(all(v.x > 1 and v.y <= 1 for v in vs[n + m:]), "zone C vertices must be last")
    lo = _normal_ratio_vs_one(poly, n)
    hi = _normal_ratio_vs_one(poly, n + m)
    if lo < 0 < hi:
        return CaseTag("one")
    if lo >= 0:
        _check(n >= 1, "case two needs a vertex in zone A")
        return CaseTag("two", reflected=False, n=n)
    # after reflection zone C becomes zone A
    _check(t >= 1, "reflected case two needs a vertex in zone A")
    return CaseTag("two", reflected=True, n=t)


def witness_nonnegative(rideal: RIdeal, declared_I=None) -> WitnessResult:
    poly = weighted_minkowski_sum(rideal)
    if not contains_one(poly):
        raise PolygonWithoutOne(f"{poly} does not contain (1, 1); mld is -inf")
    e, gamma = invariants_for(rideal, declared_I)
    bound = bound_nonneg(e, gamma)
    tag = classify(poly)

    if tag.kind == "one":
        p = Divisor(1, 1)
        value = log_discrepancy(poly, p)
    else:
        oriented = reflect(poly) if tag.reflected else poly
        vs = oriented.vertices
        _check(tag.n < len(vs), "facet leaving zone A must be compact")
        a, b = vs[tag.n - 1], vs[tag.n]
        _check(1 + gamma <= a.y <= 2, "last zone A vertex must have 1 + gamma <= y <= 2")
        _, _, step = facet_lattice_step(Facet(a, b), rideal.exponents)
        _check(sum(step) <= bound, f"lattice step {step} exceeds bound {bound}")
        value, p = box_minimum(oriented, step[0], step[1])
        if tag.reflected:
            p = p.swap()
        _check(log_discrepancy(poly, p) == value, "box minimum must transfer back")

    _check(value >= 0, "mld must be nonnegative when (1, 1) lies in the polygon")
    _check(p.logdisc <= bound, f"witness {p} exceeds bound {bound}")
    return WitnessResult(MldValue(value), p, p.logdisc, bound, tag)


def _negative_direction(poly: NewtonPolygon, exponents) -> tuple[Divisor, bool]:
    """Witness on a convenient polygon not containing ``(1, 1)``.

    Returns the divisor in the coordinates of ``poly`` and whether the
    construction ran on the reflected polygon.
    """
    if support(poly, (1, 1)) > 2:
        return Divisor(1, 1), False

    i0 = next(i for i, v in enumerate(poly.vertices) if in_triangle(v))
    reflected = poly.vertices[i0].y <= 1
    if reflected:
        poly = reflect(poly)
    vs = poly.vertices
    k = len(vs)

    j0 = max(i for i, v in enumerate(vs) if in_triangle(v))
    _check(vs[j0].y > 1, "last triangle vertex must lie above y = 1")
    _check(j0 < k - 1, "last triangle vertex cannot be the last vertex")

    l0 = next(
        (i for i in range(k - 1) if line_side(vs[i], vs[i + 1], ONE) == LineSide.MINUS),
        None,
    )
    _check(l0 is not None and l0 <= j0, "some facet must pass strictly above (1, 1)")
    a, b = vs[l0], vs[l0 + 1]
    _check(in_triangle(a), "facet start must lie in the triangle")

    j, alpha, _ = facet_lattice_step(Facet(a, b), exponents)
    lam = Fraction(exponents[j])
    c = Point(a.x + alpha * (b.x - a.x), a.y + alpha * (b.y - a.y))

    shift = 0
    while True:
        nxt = c.x - (shift + 1) * lam
        if nxt <= a.x or line_side(a, Point(nxt, c.y), ONE) != LineSide.MINUS:
            break
        shift += 1
    d = Point(c.x - shift * lam, c.y)
    _check(line_side(a, d, ONE) == LineSide.MINUS, "(1, 1) must lie below line(a, d)")

    px, py = (a.y - d.y) / lam, (d.x - a.x) / lam
    _check(px.denominator == 1 and py.denominator == 1, "witness must be integral")
    p = Divisor(int(px), int(py))
    return (p.swap() if reflected else p), reflected


def witness_minus_infinity(rideal: RIdeal, declared_I=None) -> WitnessResult:
    poly = weighted_minkowski_sum(rideal)
    if contains_one(poly):
        raise PolygonContainsOne(f"{poly} contains (1, 1); mld is nonnegative")
    e, gamma = invariants_for(rideal, declared_I)
    bound = bound_minus_inf(e, gamma)

    m = 1 + rideal.max_coordinate()
    for _ in range(MAX_CONVENIENT_RETRIES):
        conv = make_convenient(rideal, m)
        conv_poly = weighted_minkowski_sum(conv)
        if contains_one(conv_poly):
            log.debug("x^%d, y^%d swallow (1, 1); doubling", m, m)
            m *= 2
            continue
        p, reflected = _negative_direction(conv_poly, conv.exponents)
        if log_discrepancy(conv_poly, p) < 0 and log_discrepancy(poly, p) < 0:
            break
        m *= 2
    else:
        raise ProofInvariantViolated("no convenient enlargement produced a witness")

    _check(p.logdisc <= bound, f"witness {p} exceeds bound {bound}")
    return WitnessResult(MldValue.minus_infinity(), p, p.logdisc, bound,
                         CaseTag("minus_inf", reflected=reflected))


def full_solve(rideal: RIdeal, declared_I=None) -> WitnessResult:
    if contains_one(weighted_minkowski_sum(rideal)):
        return witness_nonnegative(rideal, declared_I)
    return witness_minus_infinity(rideal, declared_I)
