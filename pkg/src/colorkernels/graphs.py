"""Simple undirected graphs, class recognition with witnesses, and cotrees.

Vertices are dense integers ``0..n-1``. Operations that delete vertices
return a relabeled graph; the surviving original labels are always
``sorted(kept)``, so position ``i`` in the new graph is ``sorted(kept)[i]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotCograph, PreconditionError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)
    masks: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {e} for n={self.n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(
            self, "masks", tuple(sum(1 << w for w in s) for s in nbrs)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        es = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(keep), frozenset((min(e), max(e)) for e in es))

    def delete(self, removed: Iterable[int]) -> tuple["Graph", list]:
        """Return ``(G - removed, kept)`` where ``kept[i]`` is the old label of new vertex ``i``."""
        removed = set(removed)
        kept = [v for v in range(self.n) if v not in removed]
        return self.induced(kept), kept

    def complement(self) -> "Graph":
        return complement(self)

    def components(self, within: Iterable[int] | None = None) -> list:
        """Connected components as sorted lists, ordered by least vertex."""
        alive = set(range(self.n)) if within is None else set(within)
        comps = []
        for s in sorted(alive):
            if s not in alive:
                continue
            alive.discard(s)
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w in alive:
                        alive.discard(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def is_independent(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return not any(self.has_edge(a, b) for a, b in combinations(vs, 2))


def complement(g: Graph) -> Graph:
    es = frozenset(
        (u, v) for u, v in combinations(range(g.n), 2) if v not in g.adj[u]
    )
    return Graph(g.n, es)


def disjoint_union(*graphs: Graph) -> Graph:
    es, off = [], 0
    for h in graphs:
        es.extend((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, frozenset(es))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, frozenset((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a cycle on vertices ``1..rim``."""
    es = {(0, i) for i in range(1, rim + 1)}
    for i in range(1, rim + 1):
        j = i % rim + 1
        es.add((min(i, j), max(i, j)))
    return Graph(rim + 1, frozenset(es))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# graph classes


class GraphClass(str, enum.Enum):
    INDEPENDENT = "independent"
    PATH = "path"
    LINEAR_FOREST = "linear-forest"
    SPLIT_UNION = "split-union"
    COCHORDAL_UNION = "cochordal-union"
    COGRAPH = "cograph"
    WINDMILL = "windmill"
    DOMINATED = "dominated"

    @classmethod
    def parse(cls, text: str) -> "GraphClass":
        key = text.strip().lower().replace("_", "-")
        for c in cls:
            if c.value == key:
                return c
        raise ValueError(f"unknown graph class {text!r}")


@dataclass(frozen=True)
class Recognition:
    member: bool
    witness: object = None


def _path_order(g: Graph, comp: list) -> list | None:
    """Vertex order of ``comp`` if it induces a path, starting at its least endpoint."""
    if len(comp) == 1:
        return list(comp)
    cs = set(comp)
    deg = {v: len(g.adj[v] & cs) for v in comp}
    if any(d > 2 for d in deg.values()):
        return None
    ends = [v for v in comp if deg[v] == 1]
    if len(ends) != 2:
        return None
    order, prev, cur = [ends[0]], None, ends[0]
    while True:
        nxt = [w for w in g.adj[cur] if w in cs and w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order if len(order) == len(comp) else None


def split_partition(g: Graph, comp: Sequence[int] | None = None) -> tuple | None:
    """Split partition ``(W, Z)`` of ``G[comp]`` with ``W`` a clique and ``Z`` independent.

    Among all split partitions the one with smallest ``W`` is returned, ties
    broken by the lexicographically least sorted ``W``. Returns ``None`` when
    the induced graph is not split.
    """
    vs = list(range(g.n)) if comp is None else list(comp)
    cs = set(vs)
    deg = {v: len(g.adj[v] & cs) for v in vs}
    order = sorted(vs, key=lambda v: (-deg[v], v))
    m = 0
    for i, v in enumerate(order, start=1):
        if deg[v] >= i - 1:
            m = i
    lhs = sum(deg[v] for v in order[:m])
    rhs = m * (m - 1) + sum(deg[v] for v in order[m:])
    if lhs != rhs:
        return None
    w0 = set(order[:m])
    z0 = cs - w0
    movable = [w for w in w0 if not (g.adj[w] & z0)]
    if movable:
        w0.discard(max(movable))
    return tuple(sorted(w0)), tuple(sorted(cs - w0))


def _simplicial_elimination(g: Graph, vs: Sequence[int]) -> tuple[list, list]:
    """Greedy least-index simplicial elimination of ``G[vs]``.

    Returns ``(order, stuck)``; ``stuck`` is empty iff the induced graph is chordal,
    otherwise it is a vertex set none of whose vertices is simplicial.
    """
    alive = 0
    for v in vs:
        alive |= 1 << v
    order = []
    remaining = sorted(vs)
    while remaining:
        for v in remaining:
            nb = g.masks[v] & alive
            ok = True
            rest = nb
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if (nb & ~(1 << u)) & ~g.masks[u]:
                    ok = False
                    break
            if ok:
                order.append(v)
                alive &= ~(1 << v)
                remaining.remove(v)
                break
        else:
            return order, remaining
    return order, []


def is_simplicial(g: Graph, v: int, alive_mask: int) -> bool:
    nb = g.masks[v] & alive_mask
    rest = nb
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        rest ^= low
        if (nb & ~(1 << u)) & ~g.masks[u]:
            return False
    return True


def dominating_vertices(g: Graph, comp: Sequence[int]) -> list:
    cs = set(comp)
    return [v for v in comp if cs - {v} <= g.adj[v]]


def windmill_center(g: Graph, comp: Sequence[int]) -> int | None:
    """Least vertex ``u`` dominating ``comp`` with ``max deg(comp - u) <= 1``."""
    cs = set(comp)
    for u in dominating_vertices(g, comp):
        rest = cs - {u}
        if all(len(g.adj[w] & rest) <= 1 for w in rest):
            return u
    return None


def find_induced_p4(g: Graph, alive: Iterable[int] | None = None) -> tuple | None:
    """Lexicographically least (by sorted vertex set) induced P4, in path order."""
    vs = sorted(range(g.n) if alive is None else alive)
    for quad in combinations(vs, 4):
        degs = sorted(sum(1 for w in quad if w in g.adj[v]) for v in quad)
        if degs == [1, 1, 2, 2]:
            h = g.induced(quad)
            order = _path_order(h, [0, 1, 2, 3])
            return tuple(quad[i] for i in order)
    return None


def recognize(g: Graph, cls: GraphClass) -> Recognition:
    cls = GraphClass(cls)
    comps = g.components()
    if cls is GraphClass.INDEPENDENT:
        if g.edges:
            return Recognition(False, min(g.edges))
        return Recognition(True, tuple(range(g.n)))
    if cls is GraphClass.PATH:
        if g.n == 0 or len(comps) != 1:
            return Recognition(False, comps)
        order = _path_order(g, comps[0])
        return Recognition(order is not None, tuple(order) if order else comps[0])
    if cls is GraphClass.LINEAR_FOREST:
        orders = []
        for c in comps:
            o = _path_order(g, c)
            if o is None:
                return Recognition(False, tuple(c))
            orders.append(tuple(o))
        return Recognition(True, tuple(orders))
    if cls is GraphClass.SPLIT_UNION:
        parts = []
        for c in comps:
            p = split_partition(g, c)
            if p is None:
                return Recognition(False, tuple(c))
            parts.append(p)
        if len(parts) == 1:
            return Recognition(True, parts[0])
        return Recognition(True, tuple(parts))
    if cls is GraphClass.COCHORDAL_UNION:
        orders = []
        for c in comps:
            h = complement(g.induced(c))
            order, stuck = _simplicial_elimination(h, range(h.n))
            if stuck:
                return Recognition(False, tuple(c[i] for i in stuck))
            orders.append(tuple(c[i] for i in order))
        return Recognition(True, tuple(orders))
    if cls is GraphClass.COGRAPH:
        try:
            return Recognition(True, build_cotree(g))
        except NotCograph as exc:
            return Recognition(False, exc.witness)
    if cls is GraphClass.WINDMILL:
        centers = []
        for c in comps:
            u = windmill_center(g, c)
            if u is None:
                return Recognition(False, tuple(c))
            centers.append(u)
        return Recognition(True, tuple(centers))
    if cls is GraphClass.DOMINATED:
        centers = []
        for c in comps:
            d = dominating_vertices(g, c)
            if not d:
                return Recognition(False, tuple(c))
            centers.append(d[0])
        return Recognition(True, tuple(centers))
    raise ValueError(cls)


def verify_modulator(g: Graph, x: Iterable[int], cls: GraphClass) -> bool:
    x = set(x)
    bad = [v for v in x if not 0 <= v < g.n]
    if bad:
        raise PreconditionError(f"modulator vertices out of range: {sorted(bad)}")
    rest, _ = g.delete(x)
    return recognize(rest, cls).member


def approx_cograph_modulator(g: Graph) -> frozenset:
    """Greedy 4-approximate cograph modulator: delete whole induced P4s, least first."""
    alive = set(range(g.n))
    x = set()
    while True:
        p4 = find_induced_p4(g, alive)
        if p4 is None:
            return frozenset(x)
        x.update(p4)
        alive.difference_update(p4)


# ---------------------------------------------------------------------------
# cotrees

LEAF, UNION, JOIN = "leaf", "union", "join"


@dataclass(frozen=True)
class CotreeNode:
    kind: str
    vertex: int | None = None
    left: "CotreeNode | None" = None
    right: "CotreeNode | None" = None

    def leaves(self) -> list:
        if self.kind == LEAF:
            return [self.vertex]
        return self.left.leaves() + self.right.leaves()

    def postorder(self) -> list:
        out, stack = [], [(self, False)]
        while stack:
            node, done = stack.pop()
            if done or node.kind == LEAF:
                out.append(node)
            else:
                stack.append((node, True))
                stack.append((node.right, False))
                stack.append((node.left, False))
        return out


@dataclass(frozen=True)
class Cotree:
    n: int
    root: CotreeNode | None

    def evaluate(self) -> Graph:
        """The graph represented by the tree, over the leaf labels."""
        es = set()
        if self.root is not None:
            for node in self.root.postorder():
                if node.kind == JOIN:
                    for a in node.left.leaves():
                        for b in node.right.leaves():
                            es.add((min(a, b), max(a, b)))
        return Graph(self.n, frozenset(es))

    def join_height(self) -> int:
        return join_height(self)


def _binarize(kind: str, children: list) -> CotreeNode:
    node = children[0]
    for c in children[1:]:
        node = CotreeNode(kind, left=node, right=c)
    return node


def build_cotree(g: Graph) -> Cotree:
    """Cotree of ``g``; raises :class:`NotCograph` with an induced P4 otherwise."""
    if g.n == 0:
        return Cotree(0, None)
    co = complement(g)

    def build(vs: list) -> CotreeNode:
        if len(vs) == 1:
            return CotreeNode(LEAF, vertex=vs[0])
        parts = g.components(vs)
        if len(parts) > 1:
            return _binarize(UNION, [build(p) for p in parts])
        parts = co.components(vs)
        if len(parts) > 1:
            return _binarize(JOIN, [build(p) for p in parts])
        raise NotCograph(find_induced_p4(g))

    return Cotree(g.n, build(list(range(g.n))))


def join_height(t: Cotree | CotreeNode | None) -> int:
    root = t.root if isinstance(t, Cotree) else t
    if root is None:
        return 0
    height = {}
    for node in root.postorder():
        if node.kind == LEAF:
            height[id(node)] = 0
        else:
            h = max(height[id(node.left)], height[id(node.right)])
            height[id(node)] = h + (node.kind == JOIN)
    return height[id(root)]
