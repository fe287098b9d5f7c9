"""Instances, decisions, and the exhaustive list-coloring oracle.

Colors are ``1..q``. Internally lists are handled as bitmasks where bit
``c - 1`` stands for color ``c``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graphs import Graph


def to_mask(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def from_mask(mask: int) -> frozenset:
    out, c = [], 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return frozenset(out)


@dataclass(frozen=True)
class Instance:
    """A q-(LIST) COLORING instance with an optional modulator.

    ``lists`` may be given as ``None`` (every vertex gets ``[q]``), a mapping
    from vertex to colors (missing vertices get ``[q]``), or a full sequence.
    It is normalized to a tuple of frozensets.
    """

    graph: Graph
    q: int
    modulator: frozenset = frozenset()
    lists: tuple | Mapping | Sequence | None = None

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be positive")
        n, q = self.graph.n, self.q
        mod = frozenset(self.modulator)
        if any(not 0 <= v < n for v in mod):
            raise ValueError("modulator vertex out of range")
        full = frozenset(range(1, q + 1))
        if self.lists is None:
            lists = (full,) * n
        elif isinstance(self.lists, Mapping):
            if any(not 0 <= v < n for v in self.lists):
                raise ValueError("list given for a vertex out of range")
            lists = tuple(frozenset(self.lists.get(v, full)) for v in range(n))
        else:
            lists = tuple(frozenset(s) for s in self.lists)
            if len(lists) != n:
                raise ValueError("need one list per vertex")
        for s in lists:
            if not s <= full:
                raise ValueError(f"list {sorted(s)} not within [1..{q}]")
        object.__setattr__(self, "modulator", mod)
        object.__setattr__(self, "lists", lists)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def k(self) -> int:
        return len(self.modulator)

    @property
    def full_lists(self) -> bool:
        return all(len(s) == self.q for s in self.lists)

    def list_of(self, v: int) -> frozenset:
        return self.lists[v]

    def masks(self) -> list:
        return [to_mask(s) for s in self.lists]

    def subinstance(self, vertices: Iterable[int]) -> "Instance":
        """Induced subinstance, relabeled in sorted order of ``vertices``."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Instance(
            self.graph.induced(keep),
            self.q,
            frozenset(index[v] for v in self.modulator if v in index),
            tuple(self.lists[v] for v in keep),
        )

    def remainder(self) -> Graph:
        return self.graph.delete(self.modulator)[0]

    def with_lists(self, lists) -> "Instance":
        return Instance(self.graph, self.q, self.modulator, lists)


@dataclass(frozen=True)
class Decision:
    yes: bool
    coloring: tuple | None = None
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def answer(self) -> str:
        return "YES" if self.yes else "NO"


def is_proper_list_coloring(inst: Instance, coloring: Sequence[int]) -> bool:
    if coloring is None or len(coloring) != inst.n:
        return False
    if any(coloring[v] not in inst.lists[v] for v in range(inst.n)):
        return False
    return all(coloring[u] != coloring[v] for u, v in inst.graph.edges)


def brute_force_list_color(inst: Instance) -> Decision:
    """Exact answer by backtracking over list-respecting assignments.

    Vertices are tried in descending-degree order, least color first. Domains
    are pruned by forward checking, and a domain that shrinks to a single
    color is propagated to its neighbors.
    """
    g = inst.graph
    n = g.n
    dom = inst.masks()
    if any(d == 0 for d in dom):
        return Decision(False, stats={"nodes": 0})
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    adj = [sorted(g.adj[v]) for v in range(n)]
    color = [0] * n
    nodes = 0

    def assign(v: int, bit: int, trail: list) -> bool:
        # returns False on a wipe-out; every change is logged on trail
        pending = [(v, bit)]
        while pending:
            u, b = pending.pop()
            for w in adj[u]:
                d = dom[w]
                if d & b:
                    if color[w]:
                        return False
                    trail.append((w, d))
                    d &= ~b
                    dom[w] = d
                    if d == 0:
                        return False
                    if d & (d - 1) == 0:
                        pending.append((w, d))
        return True

    def undo(trail: list):
        for w, d in reversed(trail):
            dom[w] = d

    def search(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        v = order[i]
        choices = dom[v]
        while choices:
            bit = choices & -choices
            choices ^= bit
            nodes += 1
            trail = [(v, dom[v])]
            dom[v] = bit
            color[v] = bit
            if assign(v, bit, trail) and search(i + 1):
                return True
            color[v] = 0
            undo(trail)
        return False

    # a singleton domain at the start is propagated before search
    trail0: list = []
    for v in range(n):
        d = dom[v]
        if d & (d - 1) == 0 and not assign(v, d, trail0):
            return Decision(False, stats={"nodes": nodes})

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    ok = search(0)
    if not ok:
        return Decision(False, stats={"nodes": nodes})
    coloring = tuple(color[v].bit_length() for v in range(n))
    assert is_proper_list_coloring(inst, coloring)
    return Decision(True, coloring, {"nodes": nodes})


def check_irreducible_no(inst: Instance) -> bool:
    """NO-instance whose every single-vertex deletion is a YES-instance."""
    if brute_force_list_color(inst).yes:
        return False
    for v in range(inst.n):
        rest = [u for u in range(inst.n) if u != v]
        if not brute_force_list_color(inst.subinstance(rest)).yes:
            return False
    return True


def check_equivalence(a: Instance, b: Instance) -> bool:
    return brute_force_list_color(a).yes == brute_force_list_color(b).yes
