"""Tabulate the lambda-band of D_rho against mu.

The band is 2/3 + mu/2 <= lambda <= 2/3 + 3 mu^2 / 4, so its width
3 mu^2/4 - mu/2 grows with mu. The table makes that easy to inspect.
"""

import argparse

import numpy as np

from fszego import region as rg


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu-max", type=float, default=10.0)
    ap.add_argument("--steps", type=int, default=12)
    args = ap.parse_args()

    print(f"{'mu':>10} {'lambda_lo':>12} {'lambda_hi':>12} {'width':>12}")
    for mu in np.linspace(rg.MU_MIN, args.mu_max, args.steps):
        lo, hi = rg.band(mu)
        print(f"{mu:10.4f} {lo:12.6f} {hi:12.6f} {hi - lo:12.6f}")


if __name__ == "__main__":
    main()
