from fractions import Fraction as F

import pytest
from hypothesis import settings, strategies as st

from mld_newton.newton import MonomialIdeal, RIdeal

# brute-force oracles are slow by design; timing is not under test
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def ex15(n):
    return RIdeal.of(([(n * n, 0), (0, n - 1)], F(1, n - 1) + F(1, n * n)))


def ex16(n):
    return RIdeal.of(([(n * n + n + 1, 0), (0, n + 1)], F(1, n)))


rationals = st.builds(F, st.integers(-60, 60), st.integers(1, 12))
positive_rationals = st.builds(F, st.integers(1, 40), st.integers(1, 8))
exponents = st.builds(F, st.integers(1, 12), st.integers(1, 6))
lattice_points = st.tuples(st.integers(0, 8), st.integers(0, 8))


@st.composite
def rideals(draw, max_factors=3, max_gens=4):
    k = draw(st.integers(1, max_factors))
    factors = []
    for _ in range(k):
        gens = draw(st.lists(lattice_points, min_size=1, max_size=max_gens))
        factors.append((MonomialIdeal(tuple(gens)), draw(exponents)))
    return RIdeal(tuple(factors))


@pytest.fixture
def ex15_base():
    return ex15(2)


@pytest.fixture
def ex16_base():
    return ex16(1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
