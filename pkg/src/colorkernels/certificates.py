"""NO-certificates per graph class and irreducible NO-instance constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .graphs import LEAF, UNION, Graph, GraphClass, recognize
from .listsolvers import (
    cochordal_component,
    cograph_table,
    split_component,
    windmill_component,
)
from .oracle import Instance

UNBOUNDED = math.inf


def g_bound(cls: GraphClass, q: int) -> int | float:
    """Size bound on NO-certificates for q-LIST COLORING on ``cls`` (``inf`` when none exists)."""
    cls = GraphClass(cls)
    if q < 1:
        raise ValueError("q must be positive")
    if cls is GraphClass.INDEPENDENT:
        return 1
    if cls is GraphClass.SPLIT_UNION:
        return q + 4**q
    if cls is GraphClass.COCHORDAL_UNION:
        return math.factorial(q + 1)
    if cls is GraphClass.COGRAPH:
        return 2 ** (q * q)
    if cls is GraphClass.WINDMILL:
        return 2 * q + 1
    if cls in (GraphClass.PATH, GraphClass.LINEAR_FOREST):
        return UNBOUNDED
    raise ValueError(f"no certificate bound is defined for {cls.value}")


@dataclass(frozen=True)
class Certificate:
    vertices: tuple
    cls: GraphClass
    q: int
    bound: int | float

    def subinstance(self, inst: Instance) -> Instance:
        return inst.subinstance(self.vertices)


def _no_certificate_independent(inst: Instance):
    for v in range(inst.n):
        if not inst.lists[v]:
            return [v]
    return None


def _no_certificate_split(inst: Instance):
    for comp in inst.graph.components():
        bits, clique, core, _ = split_component(inst, comp)
        if bits is None:
            return clique if clique is not None else core
    return None


def _no_certificate_cochordal(inst: Instance):
    for comp in inst.graph.components():
        res, log = cochordal_component(inst, comp)
        if res is None:
            return sorted(log.marks)
    return None


def _no_certificate_windmill(inst: Instance):
    for comp in inst.graph.components():
        bits, u, failures = windmill_component(inst, comp)
        if bits is None:
            marked = {u}
            for piece in failures:
                marked.update(piece)
            return sorted(marked)
    return None


def _cograph_clique(tree, q: int):
    omega = {}
    for node in tree.root.postorder():
        if node.kind == LEAF:
            omega[id(node)] = 1
        elif node.kind == UNION:
            omega[id(node)] = max(omega[id(node.left)], omega[id(node.right)])
        else:
            omega[id(node)] = omega[id(node.left)] + omega[id(node.right)]
    if omega[id(tree.root)] <= q:
        return None
    clique, stack = [], [tree.root]
    while stack:
        node = stack.pop()
        if node.kind == LEAF:
            clique.append(node.vertex)
        elif node.kind == UNION:
            a, b = node.left, node.right
            stack.append(a if omega[id(a)] >= omega[id(b)] else b)
        else:
            stack.extend((node.right, node.left))
    return sorted(clique)[: q + 1]


def _no_certificate_cograph(inst: Instance):
    tree, table = cograph_table(inst)
    if tree.root is None:
        return None
    full = (1 << inst.q) - 1
    if table[id(tree.root)][full]:
        return None
    clique = _cograph_clique(tree, inst.q)
    if clique is not None:
        return clique
    marked, seen = set(), set()
    stack = [(tree.root, full)]
    while stack:
        node, s = stack.pop()
        if (id(node), s) in seen:
            continue
        seen.add((id(node), s))
        if node.kind == LEAF:
            marked.add(node.vertex)
        elif node.kind == UNION:
            left_false = not table[id(node.left)][s]
            stack.append((node.left if left_false else node.right, s))
        else:
            a = table[id(node.left)]
            sub = s
            while True:
                if not a[sub]:
                    stack.append((node.left, sub))
                else:
                    stack.append((node.right, s ^ sub))
                if sub == 0:
                    break
                sub = (sub - 1) & s
    return sorted(marked)


_EXTRACTORS = {
    GraphClass.INDEPENDENT: _no_certificate_independent,
    GraphClass.SPLIT_UNION: _no_certificate_split,
    GraphClass.COCHORDAL_UNION: _no_certificate_cochordal,
    GraphClass.COGRAPH: _no_certificate_cograph,
    GraphClass.WINDMILL: _no_certificate_windmill,
}


def extract_no_certificate(inst: Instance, cls: GraphClass) -> Certificate:
    """A NO-subinstance of size at most ``g_bound(cls, q)``.

    Raises :class:`PreconditionError` if the graph is outside ``cls``, if no
    extractor exists for it, or if the instance is a YES-instance.
    """
    cls = GraphClass(cls)
    if cls not in _EXTRACTORS:
        raise PreconditionError(f"no certificate extractor for {cls.value}")
    if not recognize(inst.graph, cls).member:
        raise PreconditionError(f"graph is not in class {cls.value}")
    found = _EXTRACTORS[cls](inst)
    if found is None:
        raise PreconditionError("instance is a YES-instance; no NO-certificate exists")
    bound = g_bound(cls, inst.q)
    assert len(found) <= bound, (cls, len(found), bound)
    return Certificate(tuple(sorted(found)), cls, inst.q, bound)


# ---------------------------------------------------------------------------
# irreducible NO-instances


def make_irreducible_path(t: int) -> Instance:
    """Path ``v1..vt`` with end lists ``{1}`` and interior lists ``{1, 2}`` (t even)."""
    if t < 2 or t % 2:
        raise PreconditionError("t must be an even integer >= 2")
    lists = [{1}] + [{1, 2}] * (t - 2) + [{1}]
    g = Graph(t, frozenset((i, i + 1) for i in range(t - 1)))
    return Instance(g, 2, frozenset(), lists)


def make_irreducible_splitco(q: int) -> Instance:
    """Clique of ``q/2`` full-list vertices joined to one vertex per ``q/2``-subset of colors."""
    if q < 2 or q % 2:
        raise PreconditionError("q must be an even integer >= 2")
    h = q // 2
    subsets = list(combinations(range(1, q + 1), h))
    n = h + len(subsets)
    edges = set(combinations(range(h), 2))
    for i in range(len(subsets)):
        edges.update((x, h + i) for x in range(h))
    lists = [frozenset(range(1, q + 1))] * h + [frozenset(s) for s in subsets]
    return Instance(Graph(n, frozenset(edges)), q, frozenset(), lists)
