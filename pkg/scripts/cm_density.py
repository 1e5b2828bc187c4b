#!/usr/bin/env python3
"""Survey the reference CM module and compare supersingular counts with the
c_K(x)/2 * q^x/x main term, degree by degree.

Usage: python scripts/cm_density.py [--q 3] [--max-deg 6]
"""

import argparse
import sys
import time

from drinfeld.config import SurveyOptions
from drinfeld.fields import FieldTower
from drinfeld.survey import cm_example, density_report, run_survey
from drinfeld.textio import module_to_text


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--max-deg", type=int, default=6)
    args = ap.parse_args()

    tower = FieldTower(args.q, max_degree=4096)
    psi, c_k = cm_example(args.q, tower)
    print(f"# q = {args.q}, psi_T = {module_to_text(psi)}, c_K = {c_k}")
    print("deg  primes  supersingular  b=1  predicted        ratio")
    for x in range(1, args.max_deg + 1):
        t0 = time.time()
        recs = list(run_survey(psi, [x], SurveyOptions(with_abhyankar=False)))
        live = [r for r in recs if r.skipped is None]
        est = density_report(recs, "cm_supersingular", c_k=c_k)
        b1 = sum(1 for r in live if r.b_invariants == ["1"])
        pred = est.predicted
        ratio = est.observed_count / float(pred) if pred else float("nan")
        print(
            f"{x:3d}  {len(live):6d}  {est.observed_count:13d}  {b1:3d}  "
            f"{str(pred):>14s}  {ratio:5.2f}   [{time.time()-t0:.1f}s]"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
