#!/usr/bin/env python3
"""Success rate of the two-color pipeline on G(N, M) as the edge density M/n grows."""

import argparse
import warnings

import numpy as np

from pathramsey.config import Config
from pathramsey.lab import gnm
from pathramsey.pipeline import ColoringFailure, color_two


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=40, help="path order")
    ap.add_argument("--vertices", type=int, default=80)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--densities", default="1,2,3,4,5,6,8")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"N={args.vertices}, n={args.n}")
    print(f"{'M/n':>5} {'M':>6} {'colored':>8}  strategies")
    for k, dens in enumerate(float(x) for x in args.densities.split(",")):
        m = min(round(dens * args.n), args.vertices * (args.vertices - 1) // 2)
        wins, used = 0, {}
        for s in range(args.samples):
            g = gnm(args.vertices, m, np.random.default_rng([args.seed, k, s]))
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    c, _ = color_two(g, args.n, Config(seed=s))
            except ColoringFailure:
                continue
            wins += 1
            used[c.provenance] = used.get(c.provenance, 0) + 1
        tags = ", ".join(f"{p} x{c}" for p, c in sorted(used.items()))
        print(f"{dens:>5} {m:>6} {wins:>4}/{args.samples:<3}  {tags}")


if __name__ == "__main__":
    main()
