"""Write a seeded corpus of instance files and check each kernel against the oracle."""

import argparse
import random
from pathlib import Path

from colorkernels.formats import write_instance
from colorkernels.generators import attach_modulator, random_dominated, random_windmill
from colorkernels.graphs import Graph, GraphClass
from colorkernels.kernelize import dominated_kernelize_3col, generic_kernelize, vc_kernelize
from colorkernels.oracle import Instance, check_equivalence


def vc_case(rng, q, k, n):
    edges = {(u, v) for u in range(k) for v in range(u + 1, k) if rng.random() < 0.4}
    for v in range(k, n):
        edges.update((x, v) for x in range(k) if rng.random() < 0.45)
    return Instance(Graph(n, frozenset(edges)), q, frozenset(range(k)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    agree = 0
    for i in range(args.count):
        k = rng.randint(1, 3)
        w = attach_modulator(rng, random_windmill(rng, rng.randint(4, 10), 0.4), k, p_mod=0.4, p_cross=0.25)
        w = Instance(w.graph, 2, w.modulator)
        d = attach_modulator(rng, random_dominated(rng, rng.randint(4, 9)), k, p_cross=0.25)
        v = vc_case(rng, 3, rng.randint(2, 5), rng.randint(6, 14))
        jobs = [
            ("windmill", w, lambda x: generic_kernelize(x, GraphClass.WINDMILL)),
            ("dominated", d, dominated_kernelize_3col),
            ("vc", v, vc_kernelize),
        ]
        for name, inst, kern in jobs:
            out = kern(inst).instance
            stem = args.outdir / f"{name}_{i:03d}"
            stem.with_suffix(".gcol").write_text(write_instance(inst))
            stem.with_suffix(".kernel.gcol").write_text(write_instance(out))
            ok = check_equivalence(inst, out)
            agree += ok
            print(f"{stem.name}: n={inst.n} -> {out.n}, equivalent={ok}")
    print(f"{agree}/{3 * args.count} kernels equivalent")


if __name__ == "__main__":
    main()
