"""Write the D_rho membership grid as CSV and SVG.

Usage: python3 scripts/plot_region.py --rho 10 --resolution 400 --outdir out/
"""

import argparse
from pathlib import Path

from fszego import region as rg


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rho", type=float, default=10.0)
    ap.add_argument("--resolution", type=int, default=400)
    ap.add_argument("--outdir", type=Path, default=Path("."))
    args = ap.parse_args()

    grid = rg.grid_region(rg.RegionSpec.default(args.rho, args.resolution))
    args.outdir.mkdir(parents=True, exist_ok=True)
    stem = f"d_rho_{args.rho:g}"
    (args.outdir / f"{stem}.csv").write_text(grid.to_csv(), encoding="utf-8")
    (args.outdir / f"{stem}.svg").write_text(rg.to_svg(grid), encoding="utf-8")
    print(f"{grid.member_count} of {grid.member.size} samples inside; bounding box {grid.bounding_box}")


if __name__ == "__main__":
    main()
