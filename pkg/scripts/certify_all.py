"""Run every certification sweep and print a one-line summary per suite.

Usage: python3 scripts/certify_all.py [--lambda-steps N] [--mu-steps N]
"""

import argparse
import sys
import time

from fszego import cli


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lambda-steps", type=int, default=40)
    ap.add_argument("--mu-steps", type=int, default=13)
    ap.add_argument("--family-resolution", type=int, default=32)
    args = ap.parse_args()

    ns = cli.build_parser().parse_args([
        "verify", "all", "--lambda-steps", str(args.lambda_steps), "--mu-steps", str(args.mu_steps),
        "--family-resolution", str(args.family_resolution)])
    start = time.perf_counter()
    reports = cli.run_suites(cli.SUITES, ns)
    elapsed = time.perf_counter() - start
    for name, r in reports.items():
        status = "ok  " if r.passed else "FAIL"
        print(f"{status} {name:28s} checked={r.checked:<10d} min_gap={r.min_gap:.3e} "
              f"max_violation={r.max_violation:.3e}")
    print(f"total {elapsed:.1f} s")
    return 0 if all(r.passed for r in reports.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
