import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ex15, ex16, rideals
from oracles import (
    in_hull_plus_orthant,
    naive_grid,
    naive_logdisc,
    random_floor_ratio_tuple,
    random_facet_step_tuple,
    support_set,
)
from mld_newton.coeffs import bound_minus_inf
from mld_newton.errors import PolygonContainsOne, PolygonWithoutOne
from mld_newton.exact_geom import LineSide, Point, floor_lambda, line_side
from mld_newton.instances import random_rideal
from mld_newton.mld_core import Divisor, brute_force_oracle, log_discrepancy, minimal_computing_logdisc
from mld_newton.newton import NewtonPolygon, RIdeal, contains_one, weighted_minkowski_sum
from mld_newton.witness import (
    CaseTag,
    classify,
    full_solve,
    witness_minus_infinity,
    witness_nonnegative,
)

XY = RIdeal.of(([(1, 0), (0, 1)], 1))


def poly(*vs):
    return NewtonPolygon(tuple(Point(*v) for v in vs))


@pytest.mark.parametrize("vs, tag", [
    ([(0, 1), (1, 0)], CaseTag("one")),
    ([(0, F(5, 4)), (5, 0)], CaseTag("two", reflected=False, n=1)),
    ([(0, 5), (F(5, 4), 0)], CaseTag("two", reflected=True, n=1)),
    ([(0, 3), (F(1, 2), F(1, 2)), (3, 0)], CaseTag("one")),
])
def test_classify_examples(vs, tag):
    assert classify(poly(*vs)) == tag


def test_classify_requires_one():
    with pytest.raises(PolygonWithoutOne):
        classify(poly((0, 2), (3, 0)))


def test_witness_nonnegative_examples():
    r = witness_nonnegative(XY)
    assert (str(r.mld), tuple(r.divisor), r.logdisc) == ("1", (1, 1), 2)
    assert r.logdisc <= r.bound

    r = witness_nonnegative(ex15(2))
    assert (str(r.mld), tuple(r.divisor), r.logdisc, r.bound) == ("0", (1, 4), 5, 5)

    r = witness_nonnegative(ex15(2).reflect())
    assert (str(r.mld), tuple(r.divisor), r.logdisc) == ("0", (4, 1), 5)
    assert r.case.reflected


def test_witness_nonnegative_rejects_minus_infinity():
    with pytest.raises(PolygonWithoutOne):
        witness_nonnegative(ex16(1))


def test_witness_minus_infinity_examples():
    r = witness_minus_infinity(ex16(1))
    assert (tuple(r.divisor), r.logdisc, r.bound) == ((2, 3), 5, 5)
    r = witness_minus_infinity(ex16(2))
    assert (tuple(r.divisor), r.logdisc, r.bound) == ((3, 7), 10, 10)


def test_witness_minus_infinity_non_convenient():
    r = RIdeal.of(([(3, 0)], 3))
    res = witness_minus_infinity(r)
    P = weighted_minkowski_sum(r)
    assert log_discrepancy(P, res.divisor) < 0
    assert res.logdisc <= res.bound == bound_minus_inf(3, 2)
    assert brute_force_oracle(P, res.bound).any_negative


def test_witness_minus_infinity_needs_retry():
    # x^m, y^m with m = 2 and exponent 1/6 would swallow (1, 1); m must grow
    r = RIdeal.of(([(1, 1)], F(7, 6)), ([(1, 0)], F(1, 6)))
    P = weighted_minkowski_sum(r)
    assert not contains_one(P)
    res = witness_minus_infinity(r)
    assert log_discrepancy(P, res.divisor) < 0
    assert res.logdisc <= res.bound


def test_witness_minus_infinity_rejects_nonnegative():
    with pytest.raises(PolygonContainsOne):
        witness_minus_infinity(XY)


def test_full_solve_dispatch():
    assert str(full_solve(XY).mld) == "1"
    assert str(full_solve(ex15(2)).mld) == "0"
    assert str(full_solve(ex16(1)).mld) == "-inf"


def test_witness_json():
    assert full_solve(ex15(2)).to_json() == {
        "mld": "0", "divisor": [1, 4], "logdisc": 5, "bound": 5, "case": "two", "reflected": False,
    }


def test_declared_I_can_only_grow_bound():
    r = ex15(2)
    base = full_solve(r)
    wider = full_solve(r, declared_I=[F(5, 4), F(1, 7)])
    assert wider.bound >= base.bound
    assert wider.mld == base.mld
    with pytest.raises(ValueError):
        full_solve(r, declared_I=[F(1, 2)])


def check_sound(r):
    supp = support_set(r)
    res = full_solve(r)
    assert res.logdisc == res.divisor.px + res.divisor.py <= res.bound
    if in_hull_plus_orthant((1, 1), supp):
        # finite: the witness value is the minimum over every divisor inside the bound
        vals = [naive_logdisc(supp, p) for p in naive_grid(res.bound)]
        assert res.mld.value == min(vals) == naive_logdisc(supp, tuple(res.divisor))
        assert res.mld.value >= 0
    else:
        assert res.mld.is_minus_infinity
        assert naive_logdisc(supp, tuple(res.divisor)) < 0


@settings(max_examples=200)
@given(rideals())
def test_soundness_hypothesis(r):
    check_sound(r)


def test_soundness_seeded():
    rng = random.Random(77)
    for _ in range(300):
        check_sound(random_rideal(rng))


@settings(max_examples=200)
@given(rideals())
def test_reflection_equivariance(r):
    a, b = full_solve(r), full_solve(r.reflect())
    assert b.divisor == a.divisor.swap()
    assert b.mld == a.mld
    assert b.bound == a.bound


@pytest.mark.parametrize("n", range(2, 8))
def test_ex15_family_optimal(n):
    P = weighted_minkowski_sum(ex15(n))
    res = full_solve(ex15(n))
    assert tuple(res.divisor) == (n - 1, n * n)
    assert minimal_computing_logdisc(P, res.bound) == (n * n + n - 1, Divisor(n - 1, n * n))


@pytest.mark.parametrize("n", range(1, 7))
def test_ex16_family_optimal(n):
    P = weighted_minkowski_sum(ex16(n))
    res = full_solve(ex16(n))
    assert tuple(res.divisor) == (n + 1, n * n + n + 1)
    assert minimal_computing_logdisc(P, res.bound)[0] == (n + 1) ** 2 + 1


def facet_step_bound_holds(a, b, gamma, lam):
    lhs = (a[1] - b[1] + b[0] - a[0]) / lam
    return lhs <= math.floor((gamma + 1) / (lam * gamma)) + math.ceil((gamma + 1) / lam)


@settings(max_examples=300)
@given(st.randoms(use_true_random=False))
def test_facet_step_length_bound(rng):
    a, b, gamma, lam = random_facet_step_tuple(rng)
    assert 1 + gamma <= a[1] <= 2
    assert a[0] < b[0] and a[1] > b[1]
    assert line_side(Point(*a), Point(*b), Point(1, 1)) != LineSide.MINUS
    assert ((a[0] - b[0]) / lam).denominator == 1 and ((a[1] - b[1]) / lam).denominator == 1
    assert facet_step_bound_holds(a, b, gamma, lam)


@settings(max_examples=300)
@given(st.randoms(use_true_random=False))
def test_floor_ratio_monotone(rng):
    a, b, lam = random_floor_ratio_tuple(rng)
    assert floor_lambda(a / (a - 1), lam) + a >= floor_lambda(b / (b - 1), lam) + b
