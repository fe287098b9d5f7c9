"""Print the NO-certificate size bound g(q) and the resulting kernel exponent q*g(q) per class."""

import argparse
import math

from colorkernels.certificates import g_bound
from colorkernels.graphs import GraphClass

CLASSES = [
    GraphClass.INDEPENDENT,
    GraphClass.SPLIT_UNION,
    GraphClass.COCHORDAL_UNION,
    GraphClass.COGRAPH,
    GraphClass.WINDMILL,
    GraphClass.LINEAR_FOREST,
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=4)
    args = ap.parse_args()
    qs = range(1, args.max_q + 1)
    print(f"{'class':<18}" + "".join(f"{'q=' + str(q):>20}" for q in qs))
    for cls in CLASSES:
        cells = []
        for q in qs:
            g = g_bound(cls, q)
            cells.append("inf" if math.isinf(g) else f"{g} (k^{q * g})")
        print(f"{cls.value:<18}" + "".join(f"{c:>20}" for c in cells))


if __name__ == "__main__":
    main()
