import itertools
import random

import pytest

from colorkernels.certificates import make_irreducible_path, make_irreducible_splitco
from colorkernels.errors import PreconditionError
from colorkernels.graphs import Graph, GraphClass, path_graph, recognize
from colorkernels.oracle import Instance, brute_force_list_color, check_equivalence
from colorkernels.reductions import (
    CnfFormula,
    cnf_to_3col_linforest,
    connect_to_single_path,
    is_nae_satisfiable,
    is_satisfiable,
    nae_satisfies,
    naesat_to_qcol,
    pad_clauses,
    qcnf_to_naesat,
    tcnf_via_irreducible,
)


def all_clauses(n):
    lits = [s * v for v in range(1, n + 1) for s in (1, -1)]
    return [c for r in range(1, len(lits) + 1) for c in itertools.combinations(lits, r)]


def small_formulas(max_n, max_m):
    for n in range(1, max_n + 1):
        pool = all_clauses(n)
        for m in range(max_m + 1):
            for cs in itertools.combinations(pool, m):
                yield CnfFormula(n, cs)


def random_3cnf(rng, n, m):
    return CnfFormula(
        n, tuple(tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3)) for _ in range(m))
    )


def test_formula_validation():
    with pytest.raises(PreconditionError):
        CnfFormula(0, ())
    with pytest.raises(PreconditionError):
        CnfFormula(1, ((2,),))
    with pytest.raises(PreconditionError):
        CnfFormula(1, ((),))


# ---------------------------------------------------------------------------
# CNF to 3-coloring on linear forests


def test_single_positive_clause():
    inst = cnf_to_3col_linforest(CnfFormula(1, ((1,),)))
    assert inst.k == 5
    assert inst.remainder() == path_graph(2)
    assert brute_force_list_color(inst).yes


def test_contradiction_is_not_3_colorable():
    inst = cnf_to_3col_linforest(CnfFormula(1, ((1,), (-1,))))
    assert not brute_force_list_color(inst).yes


def test_gadget_numbering():
    inst = cnf_to_3col_linforest(CnfFormula(2, ((1, -2),)))
    g = inst.graph
    assert g.is_clique([0, 1, 2])
    assert {(3, 4), (5, 6), (0, 3), (0, 4), (0, 5), (0, 6)} <= g.edges
    a1, b1, a2, b2 = 7, 8, 9, 10
    assert g.has_edge(a1, 3) and g.has_edge(a2, 6)
    assert g.has_edge(0, a1) and g.has_edge(0, b2)
    assert g.has_edge(2, b1) and g.has_edge(2, b2)


def test_linear_forest_equivalence_exhaustive():
    count = 0
    for phi in small_formulas(2, 2):
        inst = cnf_to_3col_linforest(phi)
        assert inst.k == 2 * phi.n + 3
        assert recognize(inst.remainder(), GraphClass.LINEAR_FOREST).member
        assert brute_force_list_color(inst).yes == is_satisfiable(phi)
        count += 1
    assert count > 100


def test_single_path_connection():
    rng = random.Random(1)
    for _ in range(30):
        phi = random_3cnf(rng, rng.randint(1, 3), rng.randint(1, 4))
        inst = cnf_to_3col_linforest(phi)
        joined = connect_to_single_path(inst)
        assert joined.modulator == inst.modulator
        assert joined.n == inst.n + phi.m - 1
        assert recognize(joined.remainder(), GraphClass.PATH).member
        assert check_equivalence(inst, joined)


def test_connect_two_p2s_gives_p5():
    g = Graph(4, frozenset({(0, 1), (2, 3)}))
    out = connect_to_single_path(Instance(g, 3))
    assert out.n == 5
    assert out.graph.edges == frozenset({(0, 1), (1, 4), (2, 4), (2, 3)})
    assert recognize(out.graph, GraphClass.PATH).member


def test_connect_leaves_single_path_and_empty_remainder_alone():
    inst = Instance(path_graph(4), 3)
    assert connect_to_single_path(inst) == inst
    empty = Instance(path_graph(3), 3, frozenset(range(3)))
    assert connect_to_single_path(empty) == empty


def test_connect_preconditions():
    with pytest.raises(PreconditionError):
        connect_to_single_path(Instance(path_graph(4), 4))
    with pytest.raises(PreconditionError):
        connect_to_single_path(Instance(Graph(3, frozenset({(0, 1), (1, 2), (0, 2)})), 3))


# ---------------------------------------------------------------------------
# CNF to NAE


def test_nae_extension_examples():
    out = qcnf_to_naesat(CnfFormula(2, ((1, 2),)))
    assert out.n == 3 and out.clauses == ((1, 2, 3),)
    contra = qcnf_to_naesat(CnfFormula(1, ((1,), (-1,))))
    assert contra.clauses == ((1, 2), (-1, 2))
    assert not is_nae_satisfiable(contra)
    empty = qcnf_to_naesat(CnfFormula(1, ()))
    assert empty.n == 2 and empty.m == 0 and is_nae_satisfiable(empty)


def test_nae_extension_exhaustive():
    for phi in small_formulas(2, 2):
        out = qcnf_to_naesat(phi)
        assert out.n == phi.n + 1
        assert is_satisfiable(phi) == is_nae_satisfiable(out)


def test_nae_is_flip_symmetric():
    for phi in small_formulas(2, 2):
        for a in itertools.product((False, True), repeat=phi.n):
            assert nae_satisfies(phi, a) == nae_satisfies(phi, [not x for x in a])


# ---------------------------------------------------------------------------
# NAE to q-coloring


def test_nae_gadget_examples():
    same = naesat_to_qcol(CnfFormula(1, ((1, 1, 1),)), 3)
    assert same.k == 9
    assert not brute_force_list_color(same).yes
    mixed = naesat_to_qcol(CnfFormula(1, ((1, 1, -1),)), 3)
    assert brute_force_list_color(mixed).yes
    assert recognize(mixed.remainder(), GraphClass.INDEPENDENT).member


def test_variable_gadget_has_two_colorings():
    inst = naesat_to_qcol(CnfFormula(1, ()), 3)
    seen = set()
    for col in itertools.product(range(1, 4), repeat=inst.n):
        if col[:3] != (1, 2, 3):
            continue
        if all(col[u] != col[v] for u, v in inst.graph.edges):
            seen.add(col[3:])
    # palette fixed: T_{1,j} colored j (true) or j+1 (false)
    assert seen == {(1, 2, 3, 2, 3, 1), (2, 3, 1, 1, 2, 3)}


def test_nae_gadget_random_formulas():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(1, 2)
        phi = random_3cnf(rng, n, rng.randint(1, 4))
        inst = naesat_to_qcol(phi, 3)
        assert inst.k == 6 * n + 3
        assert brute_force_list_color(inst).yes == is_nae_satisfiable(phi)


def test_nae_gadget_four_colors():
    rng = random.Random(3)
    for _ in range(10):
        phi = CnfFormula(1, tuple(tuple(rng.choice((1, -1)) for _ in range(4)) for _ in range(2)))
        inst = naesat_to_qcol(phi, 4)
        assert inst.k == 2 * 4 + 4
        assert brute_force_list_color(inst).yes == is_nae_satisfiable(phi)


def test_nae_gadget_preconditions():
    with pytest.raises(PreconditionError):
        naesat_to_qcol(CnfFormula(1, ((1, 1),)), 3)
    with pytest.raises(PreconditionError):
        naesat_to_qcol(CnfFormula(1, ((1, 1),)), 2)


# ---------------------------------------------------------------------------
# irreducible-instance reduction


def test_lowerbound_examples():
    hard = make_irreducible_splitco(2)
    yes = tcnf_via_irreducible(CnfFormula(1, ((1, 1, 1),)), hard)
    assert yes.q == 4 and yes.k == 6
    assert brute_force_list_color(yes).yes
    no = tcnf_via_irreducible(CnfFormula(1, ((1, 1, 1), (-1, -1, -1))), hard)
    assert not brute_force_list_color(no).yes
    assert no.remainder() == Graph(6, frozenset(
        {(u + 3 * j, v + 3 * j) for j in range(2) for u, v in hard.graph.edges}
    ))


def test_lowerbound_with_path_hard_instance():
    hard = make_irreducible_path(4)
    rng = random.Random(4)
    for _ in range(10):
        phi = CnfFormula(1, tuple(tuple(rng.choice((1, -1)) for _ in range(4)) for _ in range(rng.randint(1, 2))))
        inst = tcnf_via_irreducible(phi, hard)
        assert inst.k == 2 + 4
        assert recognize(inst.remainder(), GraphClass.LINEAR_FOREST).member
        assert brute_force_list_color(inst).yes == is_satisfiable(phi)


def test_lowerbound_preconditions():
    hard = make_irreducible_splitco(2)
    with pytest.raises(PreconditionError):
        tcnf_via_irreducible(CnfFormula(1, ((1, 1),)), hard)
    not_irreducible = Instance(path_graph(3), 2, lists=[{1}, {1, 2}, {1}])
    with pytest.raises(PreconditionError):
        tcnf_via_irreducible(CnfFormula(1, ((1, 1, 1),)), not_irreducible)


def test_padding():
    assert pad_clauses(CnfFormula(1, ((1,),)), 3).clauses == ((1, 1, 1),)
    phi = CnfFormula(3, ((1, 2, 3),))
    assert pad_clauses(phi, 3) == phi
    with pytest.raises(PreconditionError):
        pad_clauses(CnfFormula(4, ((1, 2, 3, 4),)), 3)
    for f in small_formulas(2, 2):
        t = max((len(c) for c in f.clauses), default=1)
        assert is_satisfiable(pad_clauses(f, t)) == is_satisfiable(f)
