#!/usr/bin/env python3
"""Smallest n that color_two handles on random d-regular graphs, as a ratio N/n_min.

If the ratio grows without bound as N/n grows, the size-Ramsey number of
paths cannot be linear with a small constant on these graphs.
"""

import argparse
import statistics
import sys
from collections import defaultdict

from pathramsey.config import Config
from pathramsey.lab import probe_regular


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", default="3,4,5")
    ap.add_argument("--n", type=int, default=10, help="base path order; N runs over multiples of it")
    ap.add_argument("--samples", type=int, default=3)
    ap.add_argument("--factors", default="2,3,4,6,8")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-o", "--output", help="write the raw CSV here")
    args = ap.parse_args()

    factors = tuple(int(f) for f in args.factors.split(","))
    raw = []
    ratios = defaultdict(list)
    for d in (int(x) for x in args.degrees.split(",")):
        table = probe_regular(d, args.n, args.samples, Config(seed=args.seed), factors)
        raw.append(table.to_csv())
        for row in table.rows:
            if row.n_min is not None:
                ratios[d, row.N].append(row.ratio)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(raw[0] + "".join(t.split("\n", 1)[1] for t in raw[1:]))

    print(f"{'d':>3} {'N':>6} {'runs':>5} {'mean N/n_min':>13} {'max':>8}")
    for (d, big_n), vals in sorted(ratios.items()):
        print(f"{d:>3} {big_n:>6} {len(vals):>5} {statistics.fmean(vals):>13.3f} {max(vals):>8.3f}")
    if not ratios:
        sys.exit("no sample was colored")


if __name__ == "__main__":
    main()
