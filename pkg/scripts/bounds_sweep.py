#!/usr/bin/env python3
"""Sweep the mu-scale bounds over a grid of (r, R) cells and print a table.

Usage:
    python3 scripts/bounds_sweep.py --r 100 1000 10000 --big-r 3 10 100
"""

import argparse

from turan_systems.bounds import bound_reports, closing_chain_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, nargs="+", default=[100, 1000, 10**4, 10**5])
    parser.add_argument("--big-r", type=int, nargs="+", dest="big_r", default=[3, 10, 100])
    parser.add_argument("--eps1", type=float, default=0.05)
    args = parser.parse_args()

    header = f"{'r':>9} {'R':>7} {'bound':<22} {'kind':<17} {'value':>16}"
    print(header)
    print("-" * len(header))
    for r in args.r:
        for R in args.big_r:
            if R >= r:
                continue
            for rep in bound_reports(r, R, args.eps1):
                print(f"{r:>9} {R:>7} {rep.name:<22} {rep.kind:<17} {rep.value:>16.6g}")
            chain = closing_chain_check(r, R)
            if not chain.degenerate:
                print(
                    f"{r:>9} {R:>7} {'closing-chain ratio':<22} {'diagnostic':<17} "
                    f"{chain.ratio:>16.10f}"
                )


if __name__ == "__main__":
    main()
