#!/usr/bin/env python3
"""Run the regression checks at full size and print a timed pass/fail table."""

import argparse
import sys
import time

from indroots.verification import CHECKS, run_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", choices=("quick", "full"), default="full")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    failed = 0
    for name, _ in CHECKS:
        t0 = time.perf_counter()
        (r,) = run_checks(args.budget, [name], args.workers)
        failed += not r.passed
        print(f"{name:24s} {'PASS' if r.passed else 'FAIL'} {time.perf_counter() - t0:7.1f}s  {r.detail}", flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
