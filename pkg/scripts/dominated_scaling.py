"""Time the dominating-set 3-coloring solver on planted instances of growing size."""

import argparse
import random
import time

from colorkernels.generators import planted_dominated_3col
from colorkernels.listsolvers import solve_dominated_3col


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 300, 600])
    ap.add_argument("--k", type=int, nargs="+", default=[4, 6, 8, 10])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'n':>5} {'k':>3} {'answer':>6} {'assignments':>12} {'3^k':>8} {'secs':>7}")
    for n in args.sizes:
        for k in args.k:
            g, x = planted_dominated_3col(random.Random(f"{args.seed}-{n}-{k}"), n, k)
            start = time.perf_counter()
            dec = solve_dominated_3col(g, x)
            secs = time.perf_counter() - start
            print(f"{n:>5} {k:>3} {'YES' if dec.yes else 'NO':>6} "
                  f"{dec.stats['assignments']:>12} {3 ** k:>8} {secs:>7.3f}")


if __name__ == "__main__":
    main()
