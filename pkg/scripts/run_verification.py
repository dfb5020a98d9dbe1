"""Run every harness suite on a set of rings and save the JSON reports.

    python scripts/run_verification.py --seed 1 --trials 200 --out results/verify.json
"""

import argparse
import json
import sys
from pathlib import Path

from deltawitt.config import DEFAULT_RING_SET, PRESETS
from deltawitt.harness import SUITES, format_table, run_all


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rings", nargs="*", default=list(DEFAULT_RING_SET), help=f"presets: {', '.join(PRESETS)}")
    ap.add_argument("--suites", nargs="*", default=None, help=f"default all: {', '.join(SUITES)}")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--n-max", type=int, default=None)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/verify.json"))
    args = ap.parse_args()

    reports = run_all(args.rings, seed=args.seed, trials=args.trials, n_max=args.n_max,
                      suites=args.suites, workers=args.workers)
    print(format_table(reports))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True) + "\n")
    total = sum(r.wall_time for r in reports)
    print(f"\n{len(reports)} reports, {total:.1f}s in suites, written to {args.out}")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
