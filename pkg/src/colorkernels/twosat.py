"""2-SAT via strongly connected components of the implication graph."""

from __future__ import annotations


def neg(lit: int) -> int:
    return lit ^ 1


def solve_2sat(num_vars: int, clauses) -> list | None:
    """Satisfying assignment of a 2-CNF, or ``None``.

    Literal ``2*i`` is variable ``i`` true and ``2*i + 1`` is it false. A clause
    is a pair of literals; a unit clause is written ``(a, a)``.
    """
    size = 2 * num_vars
    succ = [[] for _ in range(size)]
    for a, b in clauses:
        succ[neg(a)].append(b)
        succ[neg(b)].append(a)
    comp = _tarjan(succ)
    out = []
    for i in range(num_vars):
        t, f = comp[2 * i], comp[2 * i + 1]
        if t == f:
            return None
        # Tarjan numbers components in reverse topological order
        out.append(t < f)
    return out


def _tarjan(succ: list) -> list:
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp
