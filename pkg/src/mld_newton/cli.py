"""Command line entry point: ``mld-newton <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input or I/O error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .coeffs import bound_minus_inf, bound_nonneg, gamma_of
from .errors import MldError
from .exact_geom import fmt_rat
from .instances import (
    FAMILIES,
    Instance,
    InstanceError,
    instance_from_json,
    positive_rat_field,
    random_instances,
    read_instance,
)
from .mld_core import brute_force_oracle, minimal_computing_logdisc
from .newton import contains_one, weighted_minkowski_sum
from .witness import full_solve, invariants_for

log = logging.getLogger("mld_newton")

OK, BOUND_VIOLATION, MLD_MISMATCH = "OK", "BOUND_VIOLATION", "MLD_MISMATCH"


class UsageError(Exception):
    pass


@dataclass
class VerifyReport:
    id: str
    mld: str
    divisor: tuple
    logdisc: int
    bound: int
    oracle_min_logdisc: int | None
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "mld": self.mld,
            "divisor": list(self.divisor),
            "logdisc": self.logdisc,
            "bound": self.bound,
            "oracle_min_logdisc": self.oracle_min_logdisc,
            "status": self.status,
        }
        if self.detail:
            out["detail"] = self.detail
        return out

    def to_text(self) -> str:
        line = (f"{self.id} {self.status} mld={self.mld} divisor={list(self.divisor)} "
                f"logdisc={self.logdisc} bound={self.bound} oracle_min_logdisc={self.oracle_min_logdisc}")
        return f"{line} ({self.detail})" if self.detail else line


def verify_instance(inst: Instance) -> VerifyReport:
    """Check the witness against the brute-force oracle and any expected values."""
    result = full_solve(inst.rideal, inst.declared_I)
    poly = weighted_minkowski_sum(inst.rideal)
    oracle = brute_force_oracle(poly, result.bound)
    problems = []
    status = OK
    try:
        min_logdisc, _ = minimal_computing_logdisc(poly, result.bound)
    except MldError:
        min_logdisc = None
        problems.append("no computing divisor within bound")
    if result.logdisc > result.bound:
        status = BOUND_VIOLATION
        problems.append(f"logdisc {result.logdisc} > bound {result.bound}")
    if result.mld.is_minus_infinity:
        if not oracle.any_negative:
            problems.append("oracle finds no negative divisor")
    elif oracle.any_negative or oracle.min_value != result.mld.value:
        problems.append(f"oracle min {fmt_rat(oracle.min_value)} != mld {result.mld}")

    if inst.expected:
        observed = {
            "mld": str(result.mld),
            "divisor": list(result.divisor),
            "logdisc": result.logdisc,
            "bound": result.bound,
            "min_logdisc": min_logdisc,
        }
        for key, want in inst.expected.items():
            if key in observed and observed[key] != want:
                problems.append(f"expected {key}={want!r}, got {observed[key]!r}")
    if problems and status == OK:
        status = MLD_MISMATCH
    return VerifyReport(inst.id, str(result.mld), tuple(result.divisor), result.logdisc,
                        result.bound, min_logdisc, status, "; ".join(problems))


def _workers() -> int:
    cap = os.environ.get("MLD_NEWTON_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise UsageError(f"MLD_NEWTON_THREADS: not an integer: {cap!r}") from None
    return n


def _load(args) -> Instance:
    if not args.input:
        raise UsageError("--input: an instance file is required")
    if args.input == "-":
        try:
            data = json.load(sys.stdin)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"<stdin>: invalid JSON ({exc})") from None
        if not isinstance(data, dict):
            raise InstanceError("<stdin>: top level must be an object")
        return instance_from_json(data)
    return read_instance(args.input)


def _emit(obj, args, text: str | None = None):
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(obj))


def cmd_mld(args) -> int:
    inst = _load(args)
    result = full_solve(inst.rideal, inst.declared_I)
    _emit({"mld": str(result.mld)}, args, text=str(result.mld))
    return 0


def cmd_witness(args) -> int:
    inst = _load(args)
    result = full_solve(inst.rideal, inst.declared_I)
    d = result.to_json()
    _emit(d, args, text=f"mld={d['mld']} divisor={d['divisor']} logdisc={d['logdisc']} bound={d['bound']}")
    return 0


def cmd_bound(args) -> int:
    inst = _load(args)
    e, gamma = invariants_for(inst.rideal, inst.declared_I)
    out = {
        "e": fmt_rat(e),
        "gamma": fmt_rat(gamma),
        "bound_nonneg": bound_nonneg(e, gamma),
        "bound_minus_inf": bound_minus_inf(e, gamma),
    }
    _emit(out, args, text=" ".join(f"{k}={v}" for k, v in out.items()))
    return 0


def cmd_gamma(args) -> int:
    if not args.input:
        raise UsageError("--input: a file like {\"I\": [\"2/3\", \"1/2\"]} is required")
    source = sys.stdin if args.input == "-" else open(args.input)
    with source:
        try:
            data = json.load(source)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"<file>: invalid JSON ({exc})") from None
    values = data.get("I") if isinstance(data, dict) else None
    if not isinstance(values, list) or not values:
        raise InstanceError("I: must be a nonempty list of rationals")
    res = gamma_of(positive_rat_field(v, f"I[{i}]") for i, v in enumerate(values))
    d = res.to_json()
    _emit(d, args, text=f"e={d['e']} gamma={d['gamma']} witness={d['witness']}")
    return 0


def cmd_oracle(args) -> int:
    inst = _load(args)
    poly = weighted_minkowski_sum(inst.rideal)
    radius = args.radius
    if radius is None:
        e, gamma = invariants_for(inst.rideal, inst.declared_I)
        radius = bound_nonneg(e, gamma) if contains_one(poly) else bound_minus_inf(e, gamma)
    rep = brute_force_oracle(poly, radius)
    d = rep.to_json()
    _emit(d, args, text=f"radius={d['radius']} min={d['min_value']} argmins={d['argmins']} "
                        f"any_negative={d['any_negative']}")
    return 0


def cmd_family(args) -> int:
    try:
        inst = FAMILIES[args.kind](args.n)
    except ValueError as exc:
        raise UsageError(f"n: {exc}") from None
    payload = json.dumps(inst.to_json())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0


def cmd_verify(args) -> int:
    if args.random is not None:
        if args.random < 0:
            raise UsageError("--random: count must be nonnegative")
        instances = random_instances(args.random, args.seed)
    else:
        instances = [_load(args)]
    workers = _workers()
    if workers > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(verify_instance, instances, chunksize=16))
    else:
        reports = [verify_instance(inst) for inst in instances]
    for rep in reports:
        print(json.dumps(rep.to_json()) if args.format == "json" else rep.to_text())
    return 0 if all(r.status == OK for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="instance JSON file, '-' for stdin")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="mld-newton",
        description="Minimal log discrepancies of monomial R-ideals in the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("mld", parents=[common], help="print the mld").set_defaults(func=cmd_mld, default_format="text")
    sub.add_parser("witness", parents=[common], help="witness divisor and bound").set_defaults(
        func=cmd_witness, default_format="json")
    sub.add_parser("bound", parents=[common], help="e, gamma and both bounds").set_defaults(
        func=cmd_bound, default_format="json")
    sub.add_parser("gamma", parents=[common], help="e and gamma of a coefficient set").set_defaults(
        func=cmd_gamma, default_format="json")

    p = sub.add_parser("oracle", parents=[common], help="brute-force lattice minimum")
    p.add_argument("--radius", type=int, help="taxicab radius (default: the applicable bound)")
    p.set_defaults(func=cmd_oracle, default_format="json")

    p = sub.add_parser("family", parents=[common], help="emit an optimal-bound family instance")
    p.add_argument("kind", choices=sorted(FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("--output", "-o", help="write here instead of stdout")
    p.set_defaults(func=cmd_family, default_format="json")

    p = sub.add_parser("verify", parents=[common], help="check witnesses against the oracle")
    p.add_argument("--random", type=int, help="verify this many seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify, default_format="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, InstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MldError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
