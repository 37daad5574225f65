"""Invariants of a finite coefficient set and the divisor bounds built from them.

For a finite set ``I`` of positive rationals, ``e = min I`` and ``gamma`` is
the least positive excess ``sum(n_i * b_i) - 1`` over nonnegative integer
combinations.  Writing all values over their common denominator ``d`` turns
this into a question about the numerical monoid generated by the integer
numerators, which a boolean table answers exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptySet, InvariantViolation
from .exact_geom import RatLike, lcm_of_denominators, parse_rat


def coefficient_set(values: Iterable[RatLike]) -> tuple[Fraction, ...]:
    """Deduplicate while keeping first-seen order; every value must be positive."""
    out: list[Fraction] = []
    for v in values:
        r = parse_rat(v)
        if r <= 0:
            raise ValueError(f"coefficients must be positive, got {r}")
        if r not in out:
            out.append(r)
    if not out:
        raise EmptySet("coefficient set is empty")
    return tuple(out)


def monoid_table(generators: Sequence[int], limit: int) -> list[int]:
    """``table[t]`` is the index of a generator ending a representation of ``t``.

    ``-1`` marks unreachable values; ``table[0]`` is ``len(generators)``
    (the empty sum).  Generators are tried in the given order, which fixes
    the witness reconstructed by :func:`decompose`.
    """
    table = [-1] * (limit + 1)
    table[0] = len(generators)
    for t in range(1, limit + 1):
        for i, c in enumerate(generators):
            if c <= t and table[t - c] != -1:
                table[t] = i
                break
    return table


def decompose(table: list[int], generators: Sequence[int], t: int) -> list[int]:
    counts = [0] * len(generators)
    while t > 0:
        i = table[t]
        counts[i] += 1
        t -= generators[i]
    return counts


def representable(value: RatLike, values: Iterable[RatLike]) -> bool:
    """True iff ``value`` is a nonnegative integer combination of ``values``."""
    v = parse_rat(value)
    if v == 0:
        return True
    if v < 0:
        return False
    vals = coefficient_set(values)
    d = lcm_of_denominators(v, *vals)
    target = v * d
    gens = [int(b * d) for b in vals]
    g = 0
    for c in gens:
        g = math.gcd(g, c)
    if target.denominator != 1 or int(target) % g:
        return False
    return monoid_table(gens, int(target))[int(target)] != -1


@dataclass(frozen=True)
class GammaResult:
    e: Fraction
    gamma: Fraction
    witness: dict = field(hash=False)

    def to_json(self) -> dict:
        return {
            "e": str(self.e),
            "gamma": str(self.gamma),
            "witness": {str(k): v for k, v in self.witness.items()},
        }


def gamma_of(values: Iterable[RatLike]) -> GammaResult:
    vals = coefficient_set(values)
    d = lcm_of_denominators(*vals)
    gens = [int(b * d) for b in vals]
    # The smallest monoid element above d is at most d + min(gens).
    limit = d + min(gens)
    table = monoid_table(gens, limit)
    s = next(t for t in range(d + 1, limit + 1) if table[t] != -1)
    counts = decompose(table, gens, s)
    witness = {b: n for b, n in zip(vals, counts) if n}
    return GammaResult(e=min(vals), gamma=Fraction(s, d) - 1, witness=witness)


def _bound_core(e: Fraction, gamma: Fraction) -> int:
    e, gamma = Fraction(e), Fraction(gamma)
    if gamma <= 0:
        raise InvariantViolation(f"gamma must be positive, got {gamma}")
    if e < gamma:
        raise InvariantViolation(f"need e >= gamma, got e={e}, gamma={gamma}")
    return math.floor((gamma + 1) / (e * gamma)) + math.ceil((gamma + 1) / e)


def bound_nonneg(e: RatLike, gamma: RatLike) -> int:
    """Bound on the log discrepancy of a computing divisor when mld >= 0."""
    return max(_bound_core(parse_rat(e), parse_rat(gamma)), 2)


def bound_minus_inf(e: RatLike, gamma: RatLike) -> int:
    """Bound on the log discrepancy of a computing divisor when mld = -inf."""
    return _bound_core(parse_rat(e), parse_rat(gamma)) + 1
