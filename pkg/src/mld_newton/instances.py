"""Instance files, the two optimal families and the seeded random sampler.

Instance JSON::

    {"id": "ex15-2",
     "factors": [{"exponent": "5/4", "generators": [[4, 0], [0, 1]]}],
     "declared_I": ["5/4"],                       # optional
     "expected": {"mld": "0", "divisor": [1, 4],  # optional
                  "logdisc": 5, "bound": 5}}

Rationals are always strings (``"p/q"`` or ``"n"``), never floats.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .exact_geom import fmt_rat, parse_rat
from .newton import MonomialIdeal, RIdeal

# sampler limits, fixed so seeded runs are reproducible
SAMPLER_MAX_EXPONENTS = 3
SAMPLER_MAX_DENOMINATOR = 6
SAMPLER_MAX_FACTORS = 3
SAMPLER_MAX_GENERATORS = 4
SAMPLER_MAX_COORD = 12


class InstanceError(ValueError):
    """Malformed instance; the message names the offending field."""


@dataclass
class Instance:
    rideal: RIdeal
    id: str = "instance"
    declared_I: Optional[tuple[Fraction, ...]] = None
    expected: Optional[dict] = field(default=None)

    def to_json(self) -> dict:
        out = {"id": self.id, **rideal_to_json(self.rideal)}
        if self.declared_I is not None:
            out["declared_I"] = [fmt_rat(x) for x in self.declared_I]
        if self.expected is not None:
            out["expected"] = self.expected
        return out


def rideal_to_json(rideal: RIdeal) -> dict:
    return {
        "factors": [
            {"exponent": fmt_rat(lam), "generators": [list(g) for g in ideal.generators]}
            for ideal, lam in rideal.factors
        ]
    }


def positive_rat_field(value, where: str) -> Fraction:
    try:
        r = parse_rat(value)
    except ValueError:
        raise InstanceError(f"{where}: expected a rational string like \"5/4\", got {value!r}") from None
    if r <= 0:
        raise InstanceError(f"{where}: must be positive, got {value!r}")
    return r


def rideal_from_json(data) -> RIdeal:
    if not isinstance(data, dict) or "factors" not in data:
        raise InstanceError("factors: missing")
    factors = data["factors"]
    if not isinstance(factors, list) or not factors:
        raise InstanceError("factors: must be a nonempty list")
    out = []
    for i, f in enumerate(factors):
        where = f"factors[{i}]"
        if not isinstance(f, dict):
            raise InstanceError(f"{where}: must be an object")
        lam = positive_rat_field(f.get("exponent"), f"{where}.exponent")
        gens = f.get("generators")
        if not isinstance(gens, list) or not gens:
            raise InstanceError(f"{where}.generators: must be a nonempty list of [a, b] pairs")
        pairs = []
        for k, g in enumerate(gens):
            ok = (isinstance(g, list) and len(g) == 2
                  and all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in g))
            if not ok:
                raise InstanceError(f"{where}.generators[{k}]: expected a pair of nonnegative integers, got {g!r}")
            pairs.append((g[0], g[1]))
        out.append((MonomialIdeal(tuple(pairs)), lam))
    return RIdeal(tuple(out))


def instance_from_json(data, default_id: str = "instance") -> Instance:
    rideal = rideal_from_json(data)
    declared = None
    if data.get("declared_I") is not None:
        raw = data["declared_I"]
        if not isinstance(raw, list) or not raw:
            raise InstanceError("declared_I: must be a nonempty list of rationals")
        declared = tuple(positive_rat_field(x, f"declared_I[{i}]") for i, x in enumerate(raw))
        missing = [lam for lam in rideal.exponents if lam not in declared]
        if missing:
            raise InstanceError(f"declared_I: does not contain exponent {fmt_rat(missing[0])}")
    expected = data.get("expected")
    if expected is not None and not isinstance(expected, dict):
        raise InstanceError("expected: must be an object")
    return Instance(rideal, str(data.get("id", default_id)), declared, expected)


def read_instance(path) -> Instance:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"<file>: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise InstanceError("<file>: top level must be an object")
    return instance_from_json(data, default_id=Path(path).stem)


def write_instance(inst: Instance, path) -> None:
    Path(path).write_text(json.dumps(inst.to_json()) + "\n")


def family_ex15(n: int) -> Instance:
    """``(x^{n^2}, y^{n-1})^e`` with ``e = 1/(n-1) + 1/n^2``; mld 0, optimal bound ``n^2+n-1``."""
    if n < 2:
        raise ValueError("ex15 needs n >= 2")
    e = Fraction(1, n - 1) + Fraction(1, n * n)
    target = n * n + n - 1
    return Instance(
        RIdeal.of(([(n * n, 0), (0, n - 1)], e)),
        id=f"ex15-{n}",
        expected={"mld": "0", "divisor": [n - 1, n * n], "logdisc": target,
                  "min_logdisc": target, "bound": target},
    )


def family_ex16(n: int) -> Instance:
    """``(x^{n^2+n+1}, y^{n+1})^{1/n}``; mld -inf, optimal bound ``(n+1)^2+1``."""
    if n < 1:
        raise ValueError("ex16 needs n >= 1")
    target = (n + 1) ** 2 + 1
    return Instance(
        RIdeal.of(([(n * n + n + 1, 0), (0, n + 1)], Fraction(1, n))),
        id=f"ex16-{n}",
        expected={"mld": "-inf", "divisor": [n + 1, n * n + n + 1], "logdisc": target,
                  "min_logdisc": target, "bound": target},
    )


FAMILIES = {"ex15": family_ex15, "ex16": family_ex16}


def _small(rng: random.Random, hi: int) -> int:
    # skewed towards small values so both mld branches are well represented
    return min(int(rng.expovariate(0.7)), hi)


def random_rideal(rng: random.Random) -> RIdeal:
    n_exp = rng.randint(1, SAMPLER_MAX_EXPONENTS)
    exps: list[Fraction] = []
    while len(exps) < n_exp:
        q = rng.randint(1, SAMPLER_MAX_DENOMINATOR)
        lam = Fraction(rng.randint(1, 2 * q), q)
        if lam not in exps:
            exps.append(lam)
    factors = []
    for _ in range(rng.randint(1, SAMPLER_MAX_FACTORS)):
        gens = tuple(
            (_small(rng, SAMPLER_MAX_COORD), _small(rng, SAMPLER_MAX_COORD))
            for _ in range(rng.randint(1, SAMPLER_MAX_GENERATORS))
        )
        factors.append((MonomialIdeal(gens), rng.choice(exps)))
    return RIdeal(tuple(factors))


def random_instances(count: int, seed: int) -> list[Instance]:
    rng = random.Random(seed)
    return [Instance(random_rideal(rng), id=f"rand-{seed}-{i:05d}") for i in range(count)]
