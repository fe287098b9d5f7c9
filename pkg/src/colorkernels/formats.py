"""Text formats: the ``gcol`` instance format and DIMACS CNF.

Instance files are 1-based::

    c comment
    p gcol <n> <m> <q>
    e <u> <v>
    x <v>
    l <v> <c1> ... <cj>

Vertices without an ``l`` line get the full list ``1..q``.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph
from .oracle import Instance
from .reductions import CnfFormula


def _ints(tokens: list, lineno: int) -> list:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> Instance:
    header = None
    edges: set = set()
    mod: set = set()
    lists: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind, args = tokens[0], tokens[1:]
        if kind == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: second header")
            if len(args) != 4 or args[0] != "gcol":
                raise ParseError(f"line {lineno}: header must be 'p gcol <n> <m> <q>'")
            n, m, q = _ints(args[1:], lineno)
            if n < 0 or m < 0 or q < 1:
                raise ParseError(f"line {lineno}: bad header values")
            header = (n, m, q)
            continue
        if header is None:
            raise ParseError(f"line {lineno}: '{kind}' line before header")
        n, _, q = header
        vals = _ints(args, lineno)
        if kind in ("e", "x", "l") and (not vals or any(not 1 <= v <= n for v in vals[: 2 if kind == "e" else 1])):
            raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
        if kind == "e":
            if len(vals) != 2:
                raise ParseError(f"line {lineno}: edge needs two endpoints")
            u, v = vals[0] - 1, vals[1] - 1
            if u == v:
                raise ParseError(f"line {lineno}: self-loop")
            e = (min(u, v), max(u, v))
            if e in edges:
                raise ParseError(f"line {lineno}: duplicate edge")
            edges.add(e)
        elif kind == "x":
            if len(vals) != 1:
                raise ParseError(f"line {lineno}: modulator line takes one vertex")
            if vals[0] - 1 in mod:
                raise ParseError(f"line {lineno}: duplicate modulator vertex")
            mod.add(vals[0] - 1)
        elif kind == "l":
            v, colors = vals[0] - 1, vals[1:]
            if v in lists:
                raise ParseError(f"line {lineno}: second list for vertex {v + 1}")
            if any(not 1 <= c <= q for c in colors):
                raise ParseError(f"line {lineno}: list color outside 1..{q}")
            if len(set(colors)) != len(colors):
                raise ParseError(f"line {lineno}: repeated list color")
            lists[v] = frozenset(colors)
        else:
            raise ParseError(f"line {lineno}: unknown line type {kind!r}")
    if header is None:
        raise ParseError("missing 'p gcol' header")
    n, m, q = header
    if m != len(edges):
        raise ParseError(f"header says {m} edges, found {len(edges)}")
    return Instance(Graph(n, frozenset(edges)), q, frozenset(mod), lists or None)


def write_instance(inst: Instance, comments=()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p gcol {inst.n} {inst.graph.m} {inst.q}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in inst.graph.sorted_edges())
    out.extend(f"x {v + 1}" for v in sorted(inst.modulator))
    for v in range(inst.n):
        s = inst.lists[v]
        if len(s) != inst.q:
            out.append(" ".join(["l", str(v + 1), *map(str, sorted(s))]))
    return "\n".join(out) + "\n"


def parse_dimacs_cnf(text: str) -> CnfFormula:
    header = None
    clauses: list = []
    cur: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "%":
            break
        if tokens[0] == "p":
            if header is not None or len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError(f"line {lineno}: header must be 'p cnf <n> <m>'")
            header = tuple(_ints(tokens[2:], lineno))
            continue
        if header is None:
            raise ParseError(f"line {lineno}: clause before header")
        for lit in _ints(tokens, lineno):
            if lit == 0:
                if not cur:
                    raise ParseError(f"line {lineno}: empty clause")
                clauses.append(tuple(cur))
                cur = []
            elif abs(lit) > header[0]:
                raise ParseError(f"line {lineno}: literal {lit} out of range 1..{header[0]}")
            else:
                cur.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if cur:
        clauses.append(tuple(cur))
    n, m = header
    if n < 1:
        raise ParseError("variable count must be positive")
    if len(clauses) != m:
        raise ParseError(f"header says {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def write_dimacs_cnf(phi: CnfFormula) -> str:
    out = [f"p cnf {phi.n} {phi.m}"]
    out.extend(" ".join(map(str, c)) + " 0" for c in phi.clauses)
    return "\n".join(out) + "\n"
