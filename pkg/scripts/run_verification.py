"""Run the differential verification suites with per-suite timing.

Usage: python3 scripts/run_verification.py [--max-rank N] [--suite NAME]
"""

import argparse
import sys
import time

from clusterfp.verify import SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=4)
    ap.add_argument("--suite", choices=SUITES + ("all",), default="all")
    args = ap.parse_args()

    names = SUITES if args.suite == "all" else (args.suite,)
    bad = 0
    for name in names:
        t0 = time.monotonic()
        report = run_suite(name, args.max_rank)
        dt = time.monotonic() - t0
        n_fail = len(report["failures"])
        bad += n_fail
        status = "ok" if n_fail == 0 else f"{n_fail} FAILURES"
        print(f"{name:<10} {report['total_cases']:>7} cases  {dt:7.2f}s  {status}")
        if n_fail:
            print(f"  first: {report['minimal_counterexample']}")
    return 2 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
