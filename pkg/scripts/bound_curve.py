#!/usr/bin/env python3
"""Tabulate the lower-bound coefficient over c in (3/2, 3) and report its minima."""

import argparse
import math
from fractions import Fraction

from pathramsey.pipeline import bound_curve, curve_csv, curve_grid


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--step", type=Fraction, default=Fraction(1, 10_000))
    ap.add_argument("--eps", type=Fraction, default=Fraction(0))
    ap.add_argument("-o", "--output", help="write the full CSV here")
    args = ap.parse_args()

    rows = bound_curve(curve_grid(Fraction(3, 2), Fraction(3), args.step), args.eps)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(curve_csv(rows))

    best = min(rows, key=lambda r: (r.envelope, r.c))
    print(f"grid points        {len(rows)}")
    print(f"envelope minimum   {float(best.envelope):.6f} at c = {float(best.c):.6f}  (15/4 at 5/3)")
    for name, closed, shift in (("case12", math.sqrt(3) - 1, Fraction(3, 2)), ("case2", 0.75 * (math.sqrt(5) - 1), Fraction(2))):
        vals = [(getattr(r, name), r.c) for r in rows if getattr(r, name) is not None]
        v, c = min(vals)
        print(f"{name:<8} minimum   {float(v) - 3:.8f} at parameter {float(c - shift):.6f}  (closed form {closed:.8f})")


if __name__ == "__main__":
    main()
