"""Class-specific list-coloring algorithms.

Every solver returns a :class:`~colorkernels.oracle.Decision` whose coloring
(when YES) is a tuple of colors indexed by vertex. Internal helpers expose
the intermediate structure (branching marks, cleaned cores, DP tables) that
the certificate extractors replay.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .graphs import (
    LEAF,
    UNION,
    Graph,
    GraphClass,
    build_cotree,
    recognize,
    split_partition,
    windmill_center,
)
from .oracle import Decision, Instance, brute_force_list_color
from .twosat import solve_2sat


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _require(inst_graph: Graph, cls: GraphClass):
    if not recognize(inst_graph, cls).member:
        raise PreconditionError(f"graph is not in class {cls.value}")


# ---------------------------------------------------------------------------
# lists of size at most two


def _two_list(adj: list, masks: list) -> list | None:
    """Color bits for a list instance with all lists of size <= 2, or ``None``.

    ``adj`` holds local adjacency lists. Singleton lists are propagated first;
    what remains is encoded as 2-SAT (one variable per vertex, true meaning
    the lower color of its list).
    """
    n = len(masks)
    dom = list(masks)
    fixed = [0] * n
    queue = []
    for v in range(n):
        d = dom[v]
        if d == 0:
            return None
        if d & (d - 1) == 0:
            fixed[v] = d
            queue.append(v)
    while queue:
        v = queue.pop()
        b = fixed[v]
        for w in adj[v]:
            if dom[w] & b:
                if fixed[w]:
                    return None
                d = dom[w] & ~b
                dom[w] = d
                if d == 0:
                    return None
                if d & (d - 1) == 0:
                    fixed[w] = d
                    queue.append(w)
    var = {}
    for v in range(n):
        if not fixed[v]:
            var[v] = len(var)
    if var:
        clauses = []
        for v, i in var.items():
            low_v = dom[v] & -dom[v]
            for w in adj[v]:
                if w <= v or w not in var:
                    continue
                common = dom[v] & dom[w]
                if not common:
                    continue
                j = var[w]
                low_w = dom[w] & -dom[w]
                for c in _bits(common):
                    lv = 2 * i if c == low_v else 2 * i + 1
                    lw = 2 * j if c == low_w else 2 * j + 1
                    clauses.append((lv ^ 1, lw ^ 1))
        sol = solve_2sat(len(var), clauses)
        if sol is None:
            return None
        for v, i in var.items():
            low = dom[v] & -dom[v]
            fixed[v] = low if sol[i] else dom[v] & ~low
    return fixed


def solve_two_list(inst: Instance) -> Decision:
    if any(len(s) > 2 for s in inst.lists):
        raise PreconditionError("every list must have at most two colors")
    g = inst.graph
    adj = [sorted(g.adj[v]) for v in range(g.n)]
    bits = _two_list(adj, inst.masks())
    if bits is None:
        return Decision(False)
    return Decision(True, tuple(b.bit_length() for b in bits))


# ---------------------------------------------------------------------------
# 3-coloring with a dominating set


def is_dominating(g: Graph, x) -> bool:
    xs = set(x)
    return all(v in xs or g.adj[v] & xs for v in range(g.n))


def solve_dominated_3col(g: Graph, x) -> Decision:
    """3-coloring given a dominating set ``x``, trying at most ``3**|x|`` colorings of ``x``.

    Colorings of ``x`` are enumerated up to renaming of colors (first use of
    each color in increasing order), which is safe because every list is full.
    ``stats["assignments"]`` counts the proper colorings of ``x`` whose
    extension was tested.
    """
    xs = sorted(set(x))
    if any(not 0 <= v < g.n for v in xs):
        raise PreconditionError("dominating set has vertices outside the graph")
    if not is_dominating(g, xs):
        raise PreconditionError("given set does not dominate the graph")
    rest = [v for v in range(g.n) if v not in set(xs)]
    xi = {v: i for i, v in enumerate(xs)}
    ri = {v: i for i, v in enumerate(rest)}
    radj = [sorted(ri[w] for w in g.adj[v] if w in ri) for v in rest]
    rx = [[xi[w] for w in g.adj[v] if w in xi] for v in rest]
    earlier = [[xi[w] for w in g.adj[v] if w in xi and xi[w] < i] for i, v in enumerate(xs)]
    k = len(xs)
    col = [0] * k
    stats = {"assignments": 0, "bound": 3**k}
    found = None

    def leaf() -> list | None:
        stats["assignments"] += 1
        masks = []
        for nb in rx:
            used = 0
            for j in nb:
                used |= col[j]
            m = 7 & ~used
            if not m:
                return None
            masks.append(m)
        return _two_list(radj, masks)

    def dfs(i: int, used: int) -> bool:
        nonlocal found
        if i == k:
            bits = leaf()
            if bits is None:
                return False
            found = bits
            return True
        limit = min(used + 1, 3)
        for c in range(limit):
            b = 1 << c
            if any(col[j] == b for j in earlier[i]):
                continue
            col[i] = b
            if dfs(i + 1, max(used, c + 1)):
                return True
        col[i] = 0
        return False

    if not dfs(0, 0):
        return Decision(False, stats=stats)
    coloring = [0] * g.n
    for v, i in xi.items():
        coloring[v] = col[i].bit_length()
    for v, i in ri.items():
        coloring[v] = found[i].bit_length()
    return Decision(True, tuple(coloring), stats)


# ---------------------------------------------------------------------------
# unions of cochordal graphs


@dataclass
class _BranchLog:
    marks: set = field(default_factory=set)
    max_depth: int = 0
    calls: int = 0


def _cochordal_search(g: Graph, masks: list, alive: int, depth: int, log: _BranchLog):
    """Branch on the least vertex simplicial in the complement; returns {vertex: bit} or None."""
    log.calls += 1
    log.max_depth = max(log.max_depth, depth)
    if not alive:
        return {}
    rest = alive
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if masks[v] == 0:
            log.marks.add(v)
            return None
    pivot = None
    rest = alive
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        nn = alive & ~g.masks[v] & ~low
        if all(not (g.masks[u.bit_length() - 1] & nn) for u in _bits(nn)):
            pivot = v
            break
    if pivot is None:
        raise PreconditionError("no vertex is simplicial in the complement; graph not cochordal")
    v = pivot
    log.marks.add(v)
    nbrs = g.masks[v] & alive
    non_nbrs = alive & ~nbrs & ~(1 << v)
    for c in _bits(masks[v]):
        removed = 1 << v
        for u in _bits(non_nbrs):
            if masks[u.bit_length() - 1] & c:
                removed |= u
        sub = list(masks)
        for u in _bits(nbrs):
            sub[u.bit_length() - 1] &= ~c
        res = _cochordal_search(g, sub, alive & ~removed, depth + 1, log)
        if res is not None:
            for u in _bits(removed):
                res[u.bit_length() - 1] = c
            return res
    return None


def cochordal_component(inst: Instance, comp: list) -> tuple:
    """Run the branching on one component; returns ``(bits or None, log)``."""
    alive = 0
    for v in comp:
        alive |= 1 << v
    log = _BranchLog()
    res = _cochordal_search(inst.graph, inst.masks(), alive, 0, log)
    return res, log


def solve_cochordal_union(inst: Instance) -> Decision:
    _require(inst.graph, GraphClass.COCHORDAL_UNION)
    coloring = [0] * inst.n
    depth = 0
    for comp in inst.graph.components():
        res, log = cochordal_component(inst, comp)
        depth = max(depth, log.max_depth)
        if res is None:
            return Decision(False, stats={"max_depth": depth})
        for v, b in res.items():
            coloring[v] = b.bit_length()
    return Decision(True, tuple(coloring), {"max_depth": depth})


# ---------------------------------------------------------------------------
# cographs


def cograph_table(inst: Instance, tree=None) -> tuple:
    """Bottom-up DP over the cotree: ``table[id(node)][S]`` for every color subset ``S``."""
    if tree is None:
        tree = build_cotree(inst.graph)
    q = inst.q
    full = (1 << q) - 1
    masks = inst.masks()
    table = {}
    if tree.root is None:
        return tree, table
    for node in tree.root.postorder():
        if node.kind == LEAF:
            lm = masks[node.vertex]
            row = [bool(lm & s) for s in range(full + 1)]
        elif node.kind == UNION:
            a, b = table[id(node.left)], table[id(node.right)]
            row = [a[s] and b[s] for s in range(full + 1)]
        else:
            a, b = table[id(node.left)], table[id(node.right)]
            row = []
            for s in range(full + 1):
                ok = False
                sub = s
                while True:
                    if a[sub] and b[s ^ sub]:
                        ok = True
                        break
                    if sub == 0:
                        break
                    sub = (sub - 1) & s
                row.append(ok)
        table[id(node)] = row
    return tree, table


def solve_cograph(inst: Instance) -> Decision:
    tree, table = cograph_table(inst)
    if tree.root is None:
        return Decision(True, ())
    full = (1 << inst.q) - 1
    if not table[id(tree.root)][full]:
        return Decision(False)
    masks = inst.masks()
    coloring = [0] * inst.n
    stack = [(tree.root, full)]
    while stack:
        node, s = stack.pop()
        if node.kind == LEAF:
            c = masks[node.vertex] & s
            coloring[node.vertex] = (c & -c).bit_length()
        elif node.kind == UNION:
            stack.append((node.left, s))
            stack.append((node.right, s))
        else:
            a, b = table[id(node.left)], table[id(node.right)]
            sub = s
            while not (a[sub] and b[s ^ sub]):
                sub = (sub - 1) & s
            stack.append((node.left, sub))
            stack.append((node.right, s ^ sub))
    return Decision(True, tuple(coloring))


# ---------------------------------------------------------------------------
# unions of split graphs


def max_clique_split(g: Graph, comp: list) -> list:
    """Maximum clique of a split component: ``W`` or one ``z`` plus its neighbors in ``W``."""
    w, z = split_partition(g, comp)
    best = list(w)
    for v in z:
        cand = sorted([v] + [u for u in w if u in g.adj[v]])
        if len(cand) > len(best):
            best = cand
    return sorted(best)


def cleaning_pair(g: Graph, masks: list, alive: list) -> tuple | None:
    """First pair ``(u, v)`` in lexicographic order where the Cleaning Rule deletes ``u``."""
    aset = set(alive)
    nb = {v: g.adj[v] & aset for v in alive}
    for u in alive:
        for v in alive:
            if v == u or v in nb[u]:
                continue
            if nb[u] <= nb[v] and masks[u] & masks[v] == masks[v]:
                return u, v
    return None


def clean(g: Graph, masks: list, vertices) -> tuple[list, list]:
    """Exhaustive cleaning restricted to ``vertices``; returns ``(survivors, deletions)``."""
    alive = sorted(vertices)
    deletions = []
    while True:
        pair = cleaning_pair(g, masks, alive)
        if pair is None:
            return alive, deletions
        deletions.append(pair)
        alive.remove(pair[0])


def split_component(inst: Instance, comp: list) -> tuple:
    """Decide one split component: returns ``(bits or None, clique or None, core, deletions)``."""
    g, q = inst.graph, inst.q
    clique = max_clique_split(g, comp)
    if len(clique) > q:
        return None, clique[: q + 1], None, []
    masks = inst.masks()
    core, deletions = clean(g, masks, comp)
    assert len(core) <= q + 4**q
    sub = inst.subinstance(core)
    dec = brute_force_list_color(sub)
    if not dec.yes:
        return None, None, core, deletions
    bits = {v: 1 << (c - 1) for v, c in zip(core, dec.coloring)}
    for u, v in reversed(deletions):
        bits[u] = bits[v]
    return bits, None, core, deletions


def solve_split_union(inst: Instance) -> Decision:
    _require(inst.graph, GraphClass.SPLIT_UNION)
    coloring = [0] * inst.n
    for comp in inst.graph.components():
        bits, _, _, _ = split_component(inst, comp)
        if bits is None:
            return Decision(False)
        for v, b in bits.items():
            coloring[v] = b.bit_length()
    return Decision(True, tuple(coloring))


# ---------------------------------------------------------------------------
# windmills


def _piece_ok(g: Graph, masks: list, piece: list, forbid: int) -> dict | None:
    if len(piece) == 1:
        m = masks[piece[0]] & ~forbid
        return {piece[0]: m & -m} if m else None
    a, b = piece
    ma, mb = masks[a] & ~forbid, masks[b] & ~forbid
    for ca in _bits(ma):
        rest = mb & ~ca
        if rest:
            return {a: ca, b: rest & -rest}
    return None


def windmill_component(inst: Instance, comp: list) -> tuple:
    """Returns ``(bits or None, center, failing pieces per tried color)``."""
    g = inst.graph
    masks = inst.masks()
    u = windmill_center(g, comp)
    pieces = g.components([v for v in comp if v != u])
    failures = []
    for c in _bits(masks[u]):
        bits = {u: c}
        bad = None
        for piece in pieces:
            got = _piece_ok(g, masks, piece, c)
            if got is None:
                bad = piece
                break
            bits.update(got)
        if bad is None:
            return bits, u, failures
        failures.append(bad)
    return None, u, failures


def solve_windmill(inst: Instance) -> Decision:
    _require(inst.graph, GraphClass.WINDMILL)
    coloring = [0] * inst.n
    for comp in inst.graph.components():
        bits, _, _ = windmill_component(inst, comp)
        if bits is None:
            return Decision(False)
        for v, b in bits.items():
            coloring[v] = b.bit_length()
    return Decision(True, tuple(coloring))
