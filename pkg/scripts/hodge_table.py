#!/usr/bin/env python3
"""Print smooth-fiber Euler characteristics and primitive Hodge rows.

Handy for picking out the gamma entering a defect run: for a degree-d
threefold it is the p = 1 column of the n = 3 row.
"""

from __future__ import annotations

import argparse

from hyperdefect import SmoothFiberInvariants


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3, help="fiber dimension (default 3)")
    parser.add_argument("--max-degree", type=int, default=9)
    args = parser.parse_args()
    if args.n < 1 or args.max_degree < 1:
        parser.error("need --n >= 1 and --max-degree >= 1")

    print(f"{'d':>3} {'euler':>10}  Gr^p_F row (p = 0..{args.n})")
    for d in range(1, args.max_degree + 1):
        inv = SmoothFiberInvariants.compute(args.n, d)
        row = " ".join(f"{h:>8}" for h in inv.hodge_prim)
        print(f"{d:>3} {inv.euler:>10}  {row}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
