"""Solve seeded random instances and compare each witness with the brute-force oracle.

Reports the branch split, failures, and how often the witness logdisc reaches the bound.
"""
import argparse
import random
import time
from collections import Counter

from mld_newton.instances import random_rideal
from mld_newton.mld_core import brute_force_oracle, log_discrepancy
from mld_newton.newton import weighted_minkowski_sum
from mld_newton.witness import full_solve


def check(rideal):
    res = full_solve(rideal)
    P = weighted_minkowski_sum(rideal)
    value = log_discrepancy(P, res.divisor)
    if res.mld.is_minus_infinity:
        ok = value < 0
    else:
        ok = value == res.mld.value == brute_force_oracle(P, res.bound).min_value
    return res, ok and res.logdisc <= res.bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    branches, cases, failures = Counter(), Counter(), []
    slack = Counter()
    t0 = time.perf_counter()
    for i in range(args.count):
        r = random_rideal(rng)
        res, ok = check(r)
        branch = "-inf" if res.mld.is_minus_infinity else ">=0"
        branches[branch] += 1
        cases[(res.case.kind, res.case.reflected)] += 1
        slack[res.bound - res.logdisc == 0] += 1
        if not ok:
            failures.append(i)
    dt = time.perf_counter() - t0

    print(f"instances {args.count} seed {args.seed} in {dt:.1f}s")
    print("branches  " + ", ".join(f"{k}: {v}" for k, v in sorted(branches.items())))
    print("cases     " + ", ".join(f"{k}{'/refl' if refl else ''}: {v}" for (k, refl), v in sorted(cases.items())))
    print(f"witness at the bound: {slack[True]}")
    print(f"failures  {len(failures)}" + (f" first at index {failures[:5]}" if failures else ""))
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
