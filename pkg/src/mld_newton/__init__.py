"""Exact minimal log discrepancies of monomial R-ideals on the affine plane,
with witness divisors inside explicit bounds."""
from .coeffs import GammaResult, bound_minus_inf, bound_nonneg, gamma_of
from .exact_geom import LineSide, Point, ceil_lambda, floor_lambda, in_triangle, line_side
from .mld_core import (
    Divisor,
    MldValue,
    OracleReport,
    brute_force_oracle,
    log_discrepancy,
    minimal_computing_logdisc,
)
from .newton import (
    Facet,
    MonomialIdeal,
    NewtonPolygon,
    RIdeal,
    contains_one,
    facet_lattice_step,
    make_convenient,
    polygon_of_ideal,
    reflect,
    support,
    vertex_representable,
    weighted_minkowski_sum,
)
from .witness import (
    CaseTag,
    WitnessResult,
    classify,
    full_solve,
    witness_minus_infinity,
    witness_nonnegative,
)

__version__ = "0.1.0"
