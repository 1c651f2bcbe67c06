#!/usr/bin/env python3
"""Run the full verification campaign and print the report.

Equivalent to `embtrees verify`, kept as a script so the campaign can be
launched straight from a checkout:

    python scripts/run_verification.py [--suite walkers] [--jobs 4]
"""

import argparse
import sys
import time

from embtrees.campaign import CampaignConfig, available_suites, run_campaign


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", action="append", default=None,
                        help=f"filter; available: {', '.join(available_suites())}")
    parser.add_argument("--order", type=int, default=30)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    suites = None
    if args.suite:
        suites = tuple(s for chunk in args.suite for s in chunk.split(",") if s)
    started = time.perf_counter()
    report = run_campaign(CampaignConfig(suites=suites, order=args.order, jobs=args.jobs))
    print(report.summary())
    print(f"-- wall time {time.perf_counter() - started:.1f}s")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
