#!/usr/bin/env python3
"""Timing sweep of the solver over generated instances.

Prints one row per (family, n, m) cell with the median wall time and
the decision-branch counts accumulated over the repeats.
"""

import argparse
import os
import statistics
import sys
import time
from collections import Counter

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from twocenter.driver import two_center  # noqa: E402
from twocenter.instances import generate  # noqa: E402
from twocenter.polygon import SimplePolygon  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--families", nargs="+",
                    default=["convex", "star", "comb", "random"])
    ap.add_argument("--sizes", nargs="+", default=["8x4", "12x6", "16x8"],
                    help="cells as NxM")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'family':8} {'n':>3} {'m':>3} {'median_s':>9} {'worst_s':>8}  branches")
    for fam in args.families:
        for cell in args.sizes:
            n, m = (int(v) for v in cell.split("x"))
            times = []
            branches = Counter()
            for rep in range(args.repeats):
                inst = generate(fam, n, m, args.seed + rep)
                poly = SimplePolygon(inst.polygon)
                t0 = time.perf_counter()
                sol = two_center(poly, inst.points)
                times.append(time.perf_counter() - t0)
                branches.update(sol.branch_stats)
            summary = " ".join(f"{k}={v}" for k, v in sorted(branches.items()))
            print(f"{fam:8} {n:>3} {m:>3} {statistics.median(times):>9.3f} "
                  f"{max(times):>8.3f}  {summary}")


if __name__ == "__main__":
    main()
