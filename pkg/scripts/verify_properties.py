#!/usr/bin/env python3
"""Run every property suite at larger sizes than the CLI defaults.

    python scripts/verify_properties.py --universe 6 --trials 300000 --seed 7
"""
import argparse
import sys
import time

from setdist.verifier import SUITES, format_reports, run_all


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--universe", type=int, default=6)
    parser.add_argument("--random-universe", type=int, default=16)
    parser.add_argument("--trials", type=int, default=300_000)
    parser.add_argument("--lz-max-len", type=int, default=16)
    parser.add_argument("--lz-trials", type=int, default=20_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    reports = []
    for name in SUITES:
        t0 = time.perf_counter()
        reports += run_all(trials=args.trials, size=args.universe, seed=args.seed,
                           random_size=args.random_universe, lz_max_len=args.lz_max_len,
                           lz_trials=args.lz_trials, workers=args.workers, suites=[name])
        print(f"{name}: {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    print(format_reports(reports, args.seed))
    return 0 if all(r.passed for r in reports) else 4


if __name__ == "__main__":
    sys.exit(main())
