#!/usr/bin/env python3
"""Tabulate the truncated unit-conductor density estimator
sum_{deg m <= y} mu(m) / #PGL_2(A/mA) for growing truncation depth.

Usage: python scripts/noncm_estimate.py [--q 3] [--max-deg 8]
"""

import argparse
import sys

from drinfeld.survey import noncm_truncated_sum


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--max-deg", type=int, default=8)
    args = ap.parse_args()
    print(f"# q = {args.q}  (estimator under the full-image assumption)")
    print("y   partial sum                    float")
    for y in range(args.max_deg + 1):
        s = noncm_truncated_sum(args.q, y)
        print(f"{y:2d}  {str(s):>28s}  {float(s):.12f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
