"""SAT-to-coloring transformations with small modulators.

Output vertex numbering is fixed: palette first, then variable gadgets in
variable order, then clause gadgets in clause order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError
from .graphs import Graph, GraphClass, recognize
from .oracle import Instance, check_irreducible_no


@dataclass(frozen=True)
class CnfFormula:
    """Clauses over variables ``1..n``; literal ``+i`` is x_i and ``-i`` its negation."""

    n: int
    clauses: tuple

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("variable count must be positive")
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        for c in clauses:
            if not c:
                raise PreconditionError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise PreconditionError(f"literal {lit} out of range for {self.n} variables")
        object.__setattr__(self, "clauses", clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)


def _lit_value(lit: int, assignment) -> bool:
    v = assignment[abs(lit) - 1]
    return v if lit > 0 else not v


def satisfies(phi: CnfFormula, assignment) -> bool:
    return all(any(_lit_value(l, assignment) for l in c) for c in phi.clauses)


def nae_satisfies(phi: CnfFormula, assignment) -> bool:
    for c in phi.clauses:
        vals = {_lit_value(l, assignment) for l in c}
        if len(vals) != 2:
            return False
    return True


def is_satisfiable(phi: CnfFormula) -> bool:
    return any(satisfies(phi, a) for a in product((False, True), repeat=phi.n))


def is_nae_satisfiable(phi: CnfFormula) -> bool:
    return any(nae_satisfies(phi, a) for a in product((False, True), repeat=phi.n))


def pad_clauses(phi: CnfFormula, t: int) -> CnfFormula:
    """Repeat each short clause's last literal until it has exactly ``t`` literals."""
    out = []
    for c in phi.clauses:
        if len(c) > t:
            raise PreconditionError(f"clause {c} longer than {t}")
        out.append(c + (c[-1],) * (t - len(c)))
    return CnfFormula(phi.n, tuple(out))


def qcnf_to_naesat(phi: CnfFormula) -> CnfFormula:
    """Add a fresh variable ``z = n+1`` as a positive literal to every clause."""
    z = phi.n + 1
    return CnfFormula(z, tuple(c + (z,) for c in phi.clauses))


def _edge(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


def cnf_to_3col_linforest(phi: CnfFormula) -> Instance:
    """3-COLORING instance whose remainder is a linear forest; modulator size ``2n + 3``.

    Vertices: palette 0, 1, 2; then ``T_i = 3 + 2(i-1)`` and ``F_i = T_i + 1``;
    then each clause path ``a^1, b^1, ..., a^r, b^r`` in clause order.
    """
    edges = {(0, 1), (0, 2), (1, 2)}
    p1, p3 = 0, 2

    def lit_vertex(lit: int) -> int:
        base = 3 + 2 * (abs(lit) - 1)
        return base if lit > 0 else base + 1

    for i in range(phi.n):
        t, f = 3 + 2 * i, 4 + 2 * i
        edges.update({(t, f), (p1, t), (p1, f)})
    nxt = 3 + 2 * phi.n
    for c in phi.clauses:
        if not c:
            raise PreconditionError("empty clause")
        path = list(range(nxt, nxt + 2 * len(c)))
        nxt += len(path)
        edges.update((path[i], path[i + 1]) for i in range(len(path) - 1))
        edges.add(_edge(p1, path[0]))
        edges.add(_edge(p1, path[-1]))
        for r, lit in enumerate(c):
            a, b = path[2 * r], path[2 * r + 1]
            edges.add(_edge(p3, b))
            edges.add(_edge(a, lit_vertex(lit)))
    x = frozenset(range(3 + 2 * phi.n))
    return Instance(Graph(nxt, frozenset(edges)), 3, x)


def connect_to_single_path(inst: Instance) -> Instance:
    """Join the remainder's paths into one path with fresh degree-2 connectors.

    Components are taken in order of least vertex; each path runs from its
    smaller endpoint to its larger one, and a connector joins the end of one
    path to the start of the next.
    """
    if inst.q != 3:
        raise PreconditionError("connector insertion preserves the answer only for q = 3")
    rest = [v for v in range(inst.n) if v not in inst.modulator]
    sub, _ = inst.graph.delete(inst.modulator)
    if not recognize(sub, GraphClass.LINEAR_FOREST).member:
        raise PreconditionError("remainder is not a linear forest")
    comps = inst.graph.components(within=rest)
    ends = []
    for comp in comps:
        if len(comp) == 1:
            ends.append((comp[0], comp[0]))
            continue
        tips = sorted(v for v in comp if len(inst.graph.adj[v] - inst.modulator) == 1)
        ends.append((tips[0], tips[1]))
    edges = set(inst.graph.edges)
    n = inst.n
    for (_, end), (start, _) in zip(ends, ends[1:]):
        edges.add(_edge(end, n))
        edges.add(_edge(n, start))
        n += 1
    lists = None
    if not inst.full_lists:
        lists = list(inst.lists) + [frozenset(range(1, 4))] * (n - inst.n)
    return Instance(Graph(n, frozenset(edges)), 3, inst.modulator, lists)


def naesat_to_qcol(phi: CnfFormula, q: int) -> Instance:
    """q-COLORING instance with independent remainder; modulator size ``2qn + q``.

    Vertices: palette ``0..q-1``; per variable ``T_{i,1..q}`` then
    ``F_{i,1..q}``; then one vertex per clause. ``T_{i,j}`` and ``F_{i,j}``
    see every palette vertex except ``p_j`` and ``p_{j+1}`` (indices mod q).
    """
    if q < 3:
        raise PreconditionError("the variable gadget needs q >= 3")
    for c in phi.clauses:
        if len(c) != q:
            raise PreconditionError(f"clause {c} does not have exactly {q} literals")
    edges = {_edge(a, b) for a in range(q) for b in range(a + 1, q)}

    def t_vertex(i: int, j: int) -> int:
        return q + 2 * q * (i - 1) + (j - 1)

    def f_vertex(i: int, j: int) -> int:
        return t_vertex(i, j) + q

    for i in range(1, phi.n + 1):
        for j in range(1, q + 1):
            t, f = t_vertex(i, j), f_vertex(i, j)
            edges.add((t, f))
            edges.add(_edge(t, t_vertex(i, j % q + 1)))
            allowed = {j - 1, j % q}
            for p in range(q):
                if p not in allowed:
                    edges.add((p, t))
                    edges.add((p, f))
    base = q + 2 * q * phi.n
    for k, c in enumerate(phi.clauses):
        ck = base + k
        for j, lit in enumerate(c, start=1):
            v = t_vertex(lit, j) if lit > 0 else f_vertex(-lit, j)
            edges.add((v, ck))
    return Instance(Graph(base + phi.m, frozenset(edges)), q, frozenset(range(base)))


def tcnf_via_irreducible(phi: CnfFormula, hard: Instance) -> Instance:
    """q-COLORING instance built from an irreducible NO-instance, ``q = hard.q + 2``.

    Vertices: palette ``0..q-1``; ``T_i = q + 2(i-1)`` and ``F_i = T_i + 1``;
    then one copy of ``hard`` per clause with its own vertex order. The
    modulator has size ``2n + q`` and the remainder is ``m`` copies of ``hard``.
    """
    t = hard.n
    if t < 1 or not check_irreducible_no(hard):
        raise PreconditionError("hard instance is not an irreducible NO-instance")
    for c in phi.clauses:
        if len(c) != t:
            raise PreconditionError(f"clause {c} does not have exactly {t} literals")
    q = hard.q + 2
    edges = {_edge(a, b) for a in range(q) for b in range(a + 1, q)}
    for i in range(phi.n):
        tv, fv = q + 2 * i, q + 2 * i + 1
        edges.add((tv, fv))
        for p in range(q - 2):
            edges.add((p, tv))
            edges.add((p, fv))

    def lit_vertex(lit: int) -> int:
        base = q + 2 * (abs(lit) - 1)
        return base if lit > 0 else base + 1

    nxt = q + 2 * phi.n
    for c in phi.clauses:
        edges.update((nxt + u, nxt + v) for u, v in hard.graph.edges)
        for i in range(t):
            h = nxt + i
            lst = hard.list_of(i)
            for s in range(1, q - 1):
                if s not in lst:
                    edges.add((s - 1, h))
            edges.add((q - 1, h))
            edges.add(_edge(h, lit_vertex(c[i])))
        nxt += t
    return Instance(Graph(nxt, frozenset(edges)), q, frozenset(range(q + 2 * phi.n)))
