from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import ex15, ex16, rideals
from oracles import naive_grid, naive_logdisc, support_set
from mld_newton.errors import NoComputingDivisorInRadius, RadiusTooSmall
from mld_newton.exact_geom import Point
from mld_newton.mld_core import (
    Divisor,
    MldValue,
    box_minimum,
    brute_force_oracle,
    log_discrepancy,
    minimal_computing_logdisc,
    scaled_values,
    taxicab_grid,
)
from mld_newton.newton import NewtonPolygon, RIdeal, weighted_minkowski_sum

XY = RIdeal.of(([(1, 0), (0, 1)], 1))


def test_log_discrepancy_examples():
    assert log_discrepancy(weighted_minkowski_sum(ex15(2)), Divisor(1, 4)) == 0
    assert log_discrepancy(weighted_minkowski_sum(ex16(1)), Divisor(2, 3)) == -1
    assert log_discrepancy(weighted_minkowski_sum(XY), Divisor(1, 1)) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_ex16_family_value_is_minus_one_over_n(n):
    p = Divisor(n + 1, n * n + n + 1)
    assert log_discrepancy(weighted_minkowski_sum(ex16(n)), p) == F(-1, n)


def test_divisor_rejects_axis_vectors():
    with pytest.raises(ValueError):
        Divisor(0, 3)


def test_mld_value_str():
    assert str(MldValue(F(6, 5))) == "6/5"
    assert str(MldValue.minus_infinity()) == "-inf"
    assert MldValue.minus_infinity().is_minus_infinity


def test_taxicab_grid_order():
    px, py = taxicab_grid(4)
    assert list(zip(px.tolist(), py.tolist())) == naive_grid(4)
    assert naive_grid(4) == [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]


def test_oracle_xy():
    # a(E_p) = max(p_x, p_y) for the maximal ideal, so (1, 1) is the unique minimum
    rep = brute_force_oracle(weighted_minkowski_sum(XY), 6)
    assert rep.min_value == 1
    assert rep.argmins == (Divisor(1, 1),)
    assert not rep.any_negative
    for p in naive_grid(6):
        assert log_discrepancy(weighted_minkowski_sum(XY), p) == max(p)


def test_oracle_ex15():
    rep = brute_force_oracle(weighted_minkowski_sum(ex15(2)), 5)
    assert (rep.min_value, rep.argmins, rep.any_negative) == (0, (Divisor(1, 4),), False)


def test_oracle_ex16():
    rep = brute_force_oracle(weighted_minkowski_sum(ex16(1)), 5)
    assert (rep.min_value, rep.argmins, rep.any_negative) == (-1, (Divisor(2, 3),), True)


def test_oracle_json():
    rep = brute_force_oracle(weighted_minkowski_sum(ex15(2)), 5)
    assert rep.to_json() == {"radius": 5, "min_value": "0", "argmins": [[1, 4]], "any_negative": False}


def test_oracle_radius_too_small():
    with pytest.raises(RadiusTooSmall):
        brute_force_oracle(weighted_minkowski_sum(XY), 1)


@settings(max_examples=150)
@given(rideals(), st.integers(2, 14))
def test_oracle_matches_naive(r, radius):
    supp = support_set(r)
    vals = {p: naive_logdisc(supp, p) for p in naive_grid(radius)}
    lo = min(vals.values())
    rep = brute_force_oracle(weighted_minkowski_sum(r), radius)
    assert rep.min_value == lo
    assert list(rep.argmins) == sorted(Divisor(*p) for p, v in vals.items() if v == lo)
    assert rep.any_negative == (lo < 0)


@given(rideals(), st.integers(1, 12), st.integers(1, 12), st.integers(1, 6))
def test_log_discrepancy_homogeneous(r, px, py, k):
    P = weighted_minkowski_sum(r)
    assert log_discrepancy(P, (k * px, k * py)) == k * log_discrepancy(P, (px, py))


def test_scaled_values_object_fallback():
    # coordinates large enough that int64 products could overflow
    big = 10**17
    P = NewtonPolygon((Point(0, F(big, 3)), Point(big, 0)))
    px, py = np.array([1, 2, 3]), np.array([5, 1, 7])
    num, d = scaled_values(P, px, py)
    assert num.dtype == object
    for i in range(3):
        assert F(num[i], d) == log_discrepancy(P, (int(px[i]), int(py[i])))


@given(rideals(), st.integers(1, 9), st.integers(1, 9))
def test_box_minimum_matches_naive(r, nx, ny):
    supp = support_set(r)
    cells = [(x, y) for x in range(1, nx + 1) for y in range(1, ny + 1)]
    best = min(cells, key=lambda p: (naive_logdisc(supp, p), p))
    value, p = box_minimum(weighted_minkowski_sum(r), nx, ny)
    assert (value, tuple(p)) == (naive_logdisc(supp, best), best)


def test_minimal_computing_examples():
    assert minimal_computing_logdisc(weighted_minkowski_sum(ex15(2)), 5) == (5, Divisor(1, 4))
    assert minimal_computing_logdisc(weighted_minkowski_sum(ex16(1)), 5) == (5, Divisor(2, 3))
    assert minimal_computing_logdisc(weighted_minkowski_sum(XY), 2) == (2, Divisor(1, 1))


def test_minimal_computing_radius_insufficient():
    with pytest.raises(NoComputingDivisorInRadius):
        minimal_computing_logdisc(weighted_minkowski_sum(ex16(2)), 9)
