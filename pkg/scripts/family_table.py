"""Print witness, bound and minimal computing log discrepancy for both optimal families."""
import argparse
import time

from mld_newton.instances import FAMILIES
from mld_newton.mld_core import minimal_computing_logdisc
from mld_newton.newton import weighted_minkowski_sum
from mld_newton.witness import full_solve

RANGES = {"ex15": range(2, 13), "ex16": range(1, 11)}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=sorted(FAMILIES), action="append")
    args = ap.parse_args()
    print(f"{'family':6} {'n':>3} {'mld':>5} {'divisor':>14} {'logdisc':>8} {'bound':>6} {'minimal':>8} {'ms':>7}")
    for kind in args.kind or sorted(FAMILIES):
        for n in RANGES[kind]:
            t0 = time.perf_counter()
            inst = FAMILIES[kind](n)
            res = full_solve(inst.rideal)
            minimal, _ = minimal_computing_logdisc(weighted_minkowski_sum(inst.rideal), res.bound)
            ms = 1000 * (time.perf_counter() - t0)
            print(f"{kind:6} {n:>3} {str(res.mld):>5} {str(tuple(res.divisor)):>14} "
                  f"{res.logdisc:>8} {res.bound:>6} {minimal:>8} {ms:>7.1f}")


if __name__ == "__main__":
    main()
