"""Seeded random instances for each graph class.

All functions take a ``random.Random`` so callers control reproducibility.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import Graph, complement, disjoint_union
from .oracle import Instance


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, frozenset(e for e in combinations(range(n), 2) if rng.random() < p))


def _shuffle_labels(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, frozenset((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges))


def random_split(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    w = rng.randint(0, n)
    edges = set(combinations(range(w), 2))
    for z in range(w, n):
        edges.update((x, z) for x in range(w) if rng.random() < p)
    return _shuffle_labels(rng, Graph(n, frozenset(edges)))


def random_chordal(rng: random.Random, n: int) -> Graph:
    """Each new vertex attaches to a random clique among the earlier ones."""
    edges = set()
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        clique = []
        for u in rng.sample(range(v), v):
            if all(u in adj[c] for c in clique) and rng.random() < 0.6:
                clique.append(u)
        for u in clique:
            edges.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
    return _shuffle_labels(rng, Graph(n, frozenset(edges)))


def random_cochordal(rng: random.Random, n: int) -> Graph:
    return complement(random_chordal(rng, n))


def random_cograph(rng: random.Random, n: int) -> Graph:
    if n == 0:
        return Graph(0, frozenset())
    parts = [Graph(1, frozenset()) for _ in range(n)]
    while len(parts) > 1:
        a = parts.pop(rng.randrange(len(parts)))
        b = parts.pop(rng.randrange(len(parts)))
        u = disjoint_union(a, b)
        if rng.random() < 0.5:
            extra = {(i, a.n + j) for i in range(a.n) for j in range(b.n)}
            u = Graph(u.n, u.edges | extra)
        parts.append(u)
    return _shuffle_labels(rng, parts[0])


def random_windmill(rng: random.Random, n: int, p_blade: float = 0.6) -> Graph:
    """Union of hubs, each adjacent to a blade set carrying a random matching."""
    comps = []
    left = n
    while left:
        size = rng.randint(1, left)
        left -= size
        edges = {(0, i) for i in range(1, size)}
        blades = list(range(1, size))
        rng.shuffle(blades)
        for a, b in zip(blades[::2], blades[1::2]):
            if rng.random() < p_blade:
                edges.add((min(a, b), max(a, b)))
        comps.append(Graph(size, frozenset(edges)))
    return _shuffle_labels(rng, disjoint_union(*comps))


def random_dominated(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    comps = []
    left = n
    while left:
        size = rng.randint(1, left)
        left -= size
        edges = {(0, i) for i in range(1, size)}
        edges.update(e for e in combinations(range(1, size), 2) if rng.random() < p)
        comps.append(Graph(size, frozenset(edges)))
    return _shuffle_labels(rng, disjoint_union(*comps))


def random_split_union(rng: random.Random, n: int) -> Graph:
    comps, left = [], n
    while left:
        size = rng.randint(1, left)
        left -= size
        comps.append(random_split(rng, size))
    return disjoint_union(*comps)


def random_cochordal_union(rng: random.Random, n: int) -> Graph:
    comps, left = [], n
    while left:
        size = rng.randint(1, left)
        left -= size
        comps.append(random_cochordal(rng, size))
    return disjoint_union(*comps)


def random_linear_forest(rng: random.Random, n: int) -> Graph:
    edges, start = set(), 0
    while start < n:
        size = rng.randint(1, n - start)
        edges.update((i, i + 1) for i in range(start, start + size - 1))
        start += size
    return _shuffle_labels(rng, Graph(n, frozenset(edges)))


def random_lists(rng: random.Random, n: int, q: int, p_drop: float = 0.3) -> list:
    out = []
    for _ in range(n):
        out.append(frozenset(c for c in range(1, q + 1) if rng.random() >= p_drop))
    return out


def attach_modulator(rng: random.Random, rest: Graph, k: int, p_mod: float = 0.5,
                     p_cross: float = 0.4) -> Instance:
    """Instance on ``rest`` plus ``k`` new modulator vertices (labels shuffled)."""
    n = rest.n + k
    edges = set(rest.edges)
    mod = list(range(rest.n, n))
    edges.update(e for e in combinations(mod, 2) if rng.random() < p_mod)
    for x in mod:
        edges.update((v, x) for v in range(rest.n) if rng.random() < p_cross)
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph(n, frozenset((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
    return Instance(g, 3, frozenset(perm[x] for x in mod))


def planted_dominated_3col(rng: random.Random, n: int, k: int, extra_degree: float = 3.0):
    """Graph with a planted 3-coloring and a planted dominating set of size ``k``.

    Returns ``(graph, dominating_set)``. Every vertex outside the set gets one
    or two neighbors in it of a different planted color, plus random
    color-respecting edges with expected degree ``extra_degree``.
    """
    color = [rng.randrange(3) for _ in range(n)]
    xs = rng.sample(range(n), k)
    for i, x in enumerate(xs):
        color[x] = i % 3
    xset = set(xs)
    edges = set()
    for v in range(n):
        if v in xset:
            continue
        opts = [x for x in xs if color[x] != color[v]]
        if not opts:
            color[v] = (color[xs[0]] + 1) % 3
            opts = [x for x in xs if color[x] != color[v]]
        for x in rng.sample(opts, min(len(opts), rng.randint(1, 2))):
            edges.add((min(v, x), max(v, x)))
    p = extra_degree / max(n - 1, 1)
    for u, v in combinations(range(n), 2):
        if color[u] != color[v] and rng.random() < p:
            edges.add((u, v))
    return Graph(n, frozenset(edges)), frozenset(xs)
