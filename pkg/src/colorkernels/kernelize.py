"""Kernelization for q-COLORING on structurally parameterized graphs.

``generic_kernelize`` marks, for every small pattern graph ``H`` on
``t <= g(q)`` vertices and every tuple of modulator subsets ``(S_1..S_t)``
with ``|S_i| <= q``, the lexicographically least vertex set of ``G - X``
realizing it (``H`` induced, ``S_i`` inside the neighborhood of the i-th
vertex). Rather than looping over all ``(H, S)`` pairs, remainder subsets
are scanned in lexicographic order and a subset is marked exactly when it
is the first to realize some pair. A subset realizes a pair iff some
bijection is an isomorphism onto ``H`` that maps each ``S_i`` into the
trace ``N(v) & X`` of its vertex; realizations are downward closed in the
``S_i``, so only the maximal tuples need checking and only against
earlier marked subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product

from .certificates import g_bound
from .errors import EnvelopeExceeded, PreconditionError
from .graphs import Graph, GraphClass, complete_graph, recognize, verify_modulator
from .oracle import Instance


@dataclass(frozen=True)
class Envelope:
    """Size guard for the marking kernel (its cost grows like n**g)."""

    max_g: int = 5
    max_k: int = 4
    max_n: int = 30

    def check(self, g: int, k: int, n: int):
        if g > self.max_g or k > self.max_k or n > self.max_n:
            raise EnvelopeExceeded(
                f"g={g}, k={k}, n={n} exceeds envelope "
                f"(g<={self.max_g}, k<={self.max_k}, n<={self.max_n})"
            )


@dataclass(frozen=True)
class KernelResult:
    instance: Instance
    stats: dict = field(default_factory=dict)
    # origin[i]: original vertices represented by output vertex i (empty for new vertices)
    origin: tuple = ()


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _max_subsets(trace: int, q: int) -> list:
    if _popcount(trace) <= q:
        return [trace]
    bits = [1 << i for i in range(trace.bit_length()) if trace >> i & 1]
    return [sum(c) for c in combinations(bits, q)]


def _embeds(adj_a, lab_a, deg_a, adj_b, lab_b, deg_b, exact: bool) -> bool:
    """Is there an isomorphism a -> b with lab_a[i] == / subset of lab_b[phi(i)]?"""
    t = len(adj_a)
    cand = []
    for i in range(t):
        if exact:
            c = [j for j in range(t) if deg_b[j] == deg_a[i] and lab_b[j] == lab_a[i]]
        else:
            c = [j for j in range(t) if deg_b[j] == deg_a[i] and not lab_a[i] & ~lab_b[j]]
        if not c:
            return False
        cand.append(c)
    order = sorted(range(t), key=lambda i: (len(cand[i]), -deg_a[i], i))
    phi = [-1] * t

    def rec(p: int, used: int) -> bool:
        if p == t:
            return True
        i = order[p]
        for j in cand[i]:
            if used >> j & 1:
                continue
            ok = True
            for pp in range(p):
                i2 = order[pp]
                if (adj_a[i] >> i2 & 1) != (adj_b[j] >> phi[i2] & 1):
                    ok = False
                    break
            if ok:
                phi[i] = j
                if rec(p + 1, used | (1 << j)):
                    return True
        phi[i] = -1
        return False

    return rec(0, 0)


def mark_important(inst: Instance, g_size: int, fast: bool = False) -> tuple[set, dict]:
    """Marked remainder vertices and counters; see the module docstring."""
    g, q = inst.graph, inst.q
    xs = sorted(inst.modulator)
    xbit = {v: 1 << i for i, v in enumerate(xs)}
    rest = [v for v in range(g.n) if v not in xbit]
    trace = {}
    for v in rest:
        tr = 0
        for w in g.adj[v]:
            tr |= xbit.get(w, 0)
        trace[v] = tr
    options = {v: _max_subsets(trace[v], q) for v in rest}

    marked: set = set()
    stats = {"subsets": 0, "witnesses": 0, "iso_checks": 0}
    for t in range(1, min(g_size, len(rest)) + 1):
        groups: dict = {}
        for ys in combinations(rest, t):
            stats["subsets"] += 1
            adj = []
            for v in ys:
                m = 0
                for i, w in enumerate(ys):
                    if w in g.adj[v]:
                        m |= 1 << i
                adj.append(m)
            deg = [_popcount(m) for m in adj]
            labels = [trace[v] for v in ys]
            if fast:
                key = tuple(sorted(zip(deg, labels)))
                assignments = [labels]
            else:
                key = tuple(sorted(deg))
                assignments = product(*(options[v] for v in ys))
            seen = groups.setdefault(key, [])
            new = False
            for lab in assignments:
                covered = False
                for adj_b, lab_b, deg_b in seen:
                    stats["iso_checks"] += 1
                    if _embeds(adj, lab, deg, adj_b, lab_b, deg_b, exact=fast):
                        covered = True
                        break
                if not covered:
                    new = True
                    break
            if new:
                seen.append((adj, labels, deg))
                stats["witnesses"] += 1
                marked.update(ys)
    return marked, stats


def _check_coloring_input(inst: Instance):
    if not inst.full_lists:
        raise PreconditionError("kernelization expects a q-COLORING instance (full lists)")


def generic_kernelize(
    inst: Instance,
    cls: GraphClass,
    method: str = "faithful",
    envelope: Envelope | None = None,
) -> KernelResult:
    """Keep the modulator plus every marked remainder vertex.

    ``method="fast"`` keeps one subset per exact (graph, full-trace) isomorphism
    type instead; it marks a superset of the faithful method.
    """
    cls = GraphClass(cls)
    _check_coloring_input(inst)
    if method not in ("faithful", "fast"):
        raise ValueError(f"unknown marking method {method!r}")
    if not verify_modulator(inst.graph, inst.modulator, cls):
        raise PreconditionError(f"G - X is not in class {cls.value}")
    bound = g_bound(cls, inst.q)
    if math.isinf(bound):
        raise PreconditionError(f"class {cls.value} has no NO-certificate bound")
    # subsets larger than the remainder never occur, so guard the effective size
    (envelope or Envelope()).check(min(bound, inst.n - inst.k), inst.k, inst.n)
    marked, stats = mark_important(inst, bound, fast=(method == "fast"))
    keep = sorted(set(inst.modulator) | marked)
    out = inst.subinstance(keep)
    stats.update(marked=len(marked), g=bound, method=method)
    return KernelResult(out, stats, tuple((v,) for v in keep))


# ---------------------------------------------------------------------------
# vertex cover


def vc_kernelize(inst: Instance) -> KernelResult:
    """Modulator plus one degree-q vertex per q-subset of X with a common outside neighbor."""
    _check_coloring_input(inst)
    g, q = inst.graph, inst.q
    if not verify_modulator(g, inst.modulator, GraphClass.INDEPENDENT):
        raise PreconditionError("modulator is not a vertex cover")
    xs = sorted(inst.modulator)
    k = len(xs)
    xset = set(xs)
    edges = {(i, j) for i, j in combinations(range(k), 2) if g.has_edge(xs[i], xs[j])}
    n = k
    for sub in combinations(range(k), q):
        common = set.intersection(*(set(g.adj[xs[i]]) for i in sub)) - xset if sub else set()
        if common:
            edges.update((i, n) for i in sub)
            n += 1
    out = Instance(Graph(n, frozenset(edges)), q, frozenset(range(k)))
    origin = tuple((v,) for v in xs) + ((),) * (n - k)
    return KernelResult(out, {"added": n - k, "bound": k + math.comb(k, q)}, origin)


HEADER_BYTES = 8


@dataclass(frozen=True)
class VcKernelEncoding:
    k: int
    q: int
    adjacency_bits: tuple
    subset_bits: tuple

    @property
    def payload_bits(self) -> int:
        return len(self.adjacency_bits) + len(self.subset_bits)

    def to_bytes(self) -> bytes:
        bits = list(self.adjacency_bits) + list(self.subset_bits)
        bits += [0] * (-len(bits) % 8)
        body = bytearray()
        for i in range(0, len(bits), 8):
            byte = 0
            for b in bits[i : i + 8]:
                byte = (byte << 1) | b
            body.append(byte)
        return self.k.to_bytes(4, "big") + self.q.to_bytes(4, "big") + bytes(body)

    @classmethod
    def from_bytes(cls, data: bytes) -> "VcKernelEncoding":
        if len(data) < HEADER_BYTES:
            raise ValueError("encoding shorter than its header")
        k = int.from_bytes(data[:4], "big")
        q = int.from_bytes(data[4:8], "big")
        if q < 1:
            raise ValueError("encoded q must be positive")
        need = k * k + math.comb(k, q)
        body = data[HEADER_BYTES:]
        if len(body) != (need + 7) // 8:
            raise ValueError(f"payload has {len(body)} bytes, expected {(need + 7) // 8}")
        bits = [(byte >> (7 - i)) & 1 for byte in body for i in range(8)]
        if any(bits[need:]):
            raise ValueError("nonzero padding bits")
        return cls(k, q, tuple(bits[: k * k]), tuple(bits[k * k : need]))


def _vc_shape(inst: Instance) -> tuple[int, list]:
    """Validate the canonical vc-kernel layout; returns ``(k, subsets in order)``."""
    k, q, g = inst.k, inst.q, inst.graph
    if inst.modulator != frozenset(range(k)) or not inst.full_lists:
        raise PreconditionError("kernel must list its modulator first and use full lists")
    subsets = []
    for v in range(k, g.n):
        nb = tuple(sorted(g.adj[v]))
        if len(nb) != q or any(w >= k for w in nb):
            raise PreconditionError("outside vertex must have exactly q modulator neighbors")
        subsets.append(nb)
    if subsets != sorted(set(subsets)):
        raise PreconditionError("outside vertices must have distinct neighborhoods in subset order")
    return k, subsets


def encode_vc_kernel(kernel: Instance) -> VcKernelEncoding:
    k, subsets = _vc_shape(kernel)
    g = kernel.graph
    adjacency = tuple(int(g.has_edge(i, j)) for i in range(k) for j in range(k))
    present = set(subsets)
    sbits = tuple(int(s in present) for s in combinations(range(k), kernel.q))
    return VcKernelEncoding(k, kernel.q, adjacency, sbits)


def decode_vc_kernel(enc: VcKernelEncoding | bytes) -> Instance:
    if isinstance(enc, (bytes, bytearray)):
        enc = VcKernelEncoding.from_bytes(bytes(enc))
    k, q = enc.k, enc.q
    if len(enc.adjacency_bits) != k * k or len(enc.subset_bits) != math.comb(k, q):
        raise ValueError("bit payload has the wrong length")
    edges = set()
    for i in range(k):
        for j in range(k):
            b = enc.adjacency_bits[i * k + j]
            if b != enc.adjacency_bits[j * k + i] or (i == j and b):
                raise ValueError("adjacency matrix must be symmetric with zero diagonal")
            if b and i < j:
                edges.add((i, j))
    n = k
    for sub, bit in zip(combinations(range(k), q), enc.subset_bits):
        if bit:
            edges.update((i, n) for i in sub)
            n += 1
    return Instance(Graph(n, frozenset(edges)), q, frozenset(range(k)))


# ---------------------------------------------------------------------------
# lists to colors


def lift_list_to_coloring(inst: Instance) -> Instance:
    """Append a q-clique palette; palette vertex i sees every vertex lacking color i."""
    g, q, n = inst.graph, inst.q, inst.n
    edges = set(g.edges)
    palette = list(range(n, n + q))
    edges.update(combinations(palette, 2))
    for v in range(n):
        for c in range(1, q + 1):
            if c not in inst.lists[v]:
                edges.add((v, n + c - 1))
    return Instance(Graph(n + q, frozenset(edges)), q, inst.modulator | frozenset(palette))


# ---------------------------------------------------------------------------
# dominated graphs, 3 colors


def _bipartite(g: Graph, vs: set) -> bool:
    side = {}
    for s in sorted(vs):
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in vs:
                    continue
                if w not in side:
                    side[w] = side[u] ^ 1
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def find_odd_wheel(g: Graph) -> int | None:
    """Least vertex whose neighborhood induces a non-bipartite graph."""
    for v in range(g.n):
        if not _bipartite(g, set(g.adj[v])):
            return v
    return None


def find_diamond(g: Graph) -> tuple | None:
    """Least ``(u, v, x, y)`` with ``u < v``, ``x < y``, ``x~y`` and both ``x, y`` adjacent to ``u`` and ``v``."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = sorted(g.adj[u] & g.adj[v])
            for i, x in enumerate(common):
                for y in common[i + 1 :]:
                    if y in g.adj[x]:
                        return u, v, x, y
    return None


def identify(g: Graph, u: int, v: int) -> Graph:
    """Merge ``v`` into ``u`` (``u < v``); vertices above ``v`` shift down by one."""
    if not u < v:
        raise ValueError("identify expects u < v")

    def lab(w):
        return u if w == v else (w - 1 if w > v else w)

    edges = set()
    for a, b in g.edges:
        a2, b2 = lab(a), lab(b)
        if a2 != b2:
            edges.add((min(a2, b2), max(a2, b2)))
    return Graph(g.n - 1, frozenset(edges))


def dominated_kernelize_3col(
    inst: Instance, method: str = "faithful", envelope: Envelope | None = None
) -> KernelResult:
    """Odd-wheel test and diamond identification down to a windmill remainder, then mark.

    The marking step needs patterns on up to ``g(3) = 7`` vertices, so the
    default guard here is widened to ``max_g=7``.
    """
    if inst.q != 3:
        raise PreconditionError("dominated kernel is for 3-COLORING")
    _check_coloring_input(inst)
    if not verify_modulator(inst.graph, inst.modulator, GraphClass.DOMINATED):
        raise PreconditionError("G - X is not in class dominated")
    g = inst.graph
    mod = set(inst.modulator)
    origin = [(v,) for v in range(g.n)]
    merges = 0
    while True:
        hub = find_odd_wheel(g)
        if hub is not None:
            k4 = Instance(complete_graph(4), 3)
            return KernelResult(
                k4, {"odd_wheel_hub": origin[hub][0], "identifications": merges}, ((),) * 4
            )
        rest, kept = g.delete(mod)
        d = find_diamond(rest)
        if d is None:
            break
        u, v = kept[d[0]], kept[d[1]]
        g = identify(g, u, v)
        origin[u] = tuple(sorted(origin[u] + origin[v]))
        del origin[v]
        mod = {w - 1 if w > v else w for w in mod}
        merges += 1
    reduced = Instance(g, 3, frozenset(mod))
    assert recognize(reduced.remainder(), GraphClass.WINDMILL).member
    res = generic_kernelize(
        reduced, GraphClass.WINDMILL, method=method, envelope=envelope or Envelope(max_g=7)
    )
    stats = dict(res.stats, identifications=merges)
    return KernelResult(res.instance, stats, tuple(origin[w] for (w,) in res.origin))
