#!/usr/bin/env python3
"""Run every construction at toy scale and verify the outputs exhaustively.

Usage:
    python3 scripts/toy_constructions.py --seed 7
"""

import argparse
import random

from turan_systems.combinatorics import binomial
from turan_systems.constructions import (
    blowup,
    expected_recursive_size,
    moser_tardos_color,
    recursive_system,
    trivial_prefix_system,
)
from turan_systems.hypergraph import is_turan_system
from turan_systems.solver import solve_min_turan


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    print("== prefix systems ==")
    for (n, s, r) in [(6, 4, 3), (8, 5, 2), (7, 7, 3)]:
        H = trivial_prefix_system(n, s, r)
        rep = is_turan_system(H, s)
        print(f"prefix  (n={n}, s={s}, r={r}): {len(H):>3} edges, verified={rep.is_turan}")

    print("\n== resampling coloring (N=6, s=4, r=3, ell=2) ==")
    out = moser_tardos_color(6, 4, 3, 2, seed=args.seed)
    print(f"success={out.success} after {out.rounds_used} resampling rounds")
    if out.success:
        for c, size in enumerate(out.class_sizes):
            ok = is_turan_system(out.color_class(c), 4).is_turan
            print(f"  class {c}: {size:>2} edges, verified={ok}")
        print(f"least class: {len(out.least_class)} <= C(6,3)/2 = {binomial(6, 3) // 2}")

    print("\n== blowup of an optimal base ==")
    A = solve_min_turan(5, 4, 3).witness
    B, rep = blowup(A, 2)
    print(
        f"base T(5,4,3)={len(A)}; blowup m=2: {len(B)} edges "
        f"(cap {rep.cap()}), verified={is_turan_system(B, 4).is_turan}"
    )

    print("\n== recursive construction (n=8, r=3, R=1, k=2, c=1) ==")
    expected, _ = expected_recursive_size(8, 3, 1, 2, c=1.0)
    G, sample = recursive_system(8, 3, 1, 2, c=1.0, seed=rng.randrange(2**32))
    print(
        f"size {sample.size_total} (expected {expected:.2f}, "
        f"{sample.retries} retries), verified={is_turan_system(G, 4).is_turan}"
    )


if __name__ == "__main__":
    main()
