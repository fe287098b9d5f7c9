import math
import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colorkernels.errors import EnvelopeExceeded, PreconditionError
from colorkernels.generators import (
    attach_modulator,
    random_dominated,
    random_graph,
    random_lists,
    random_windmill,
)
from colorkernels.graphs import (
    Graph,
    GraphClass,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    recognize,
    star_graph,
    wheel_graph,
)
from colorkernels.kernelize import (
    HEADER_BYTES,
    Envelope,
    VcKernelEncoding,
    decode_vc_kernel,
    dominated_kernelize_3col,
    encode_vc_kernel,
    find_diamond,
    find_odd_wheel,
    generic_kernelize,
    identify,
    lift_list_to_coloring,
    vc_kernelize,
)
from colorkernels.oracle import Instance, brute_force_list_color, check_equivalence


def windmill_instance(rng, q=2, k=3, n=12, p_blade=0.3):
    rest = random_windmill(rng, n - k, p_blade=p_blade)
    inst = attach_modulator(rng, rest, k, p_mod=0.4, p_cross=0.25)
    return Instance(inst.graph, q, inst.modulator)


def vc_instance(rng, q, k, n):
    g = random_graph(rng, k, 0.4)
    edges = set(g.edges)
    for v in range(k, n):
        edges.update((x, v) for x in range(k) if rng.random() < 0.5)
    return Instance(Graph(n, frozenset(edges)), q, frozenset(range(k)))


# ---------------------------------------------------------------------------
# generic marking


def test_empty_remainder_is_kept_whole():
    inst = Instance(cycle_graph(4), 2, frozenset(range(4)))
    for cls in (GraphClass.INDEPENDENT, GraphClass.WINDMILL, GraphClass.COGRAPH):
        assert generic_kernelize(inst, cls).instance == inst


def test_twins_collapse_to_one_representative():
    edges = {(0, 1)} | {(x, v) for x in (0, 1) for v in range(2, 7)}
    inst = Instance(Graph(7, frozenset(edges)), 2, frozenset({0, 1}))
    res = generic_kernelize(inst, GraphClass.INDEPENDENT)
    assert res.instance.n == 3
    assert check_equivalence(inst, res.instance)


def test_windmill_kernel_is_equivalent_on_seeded_instances():
    rng = random.Random(12)
    answers = set()
    for _ in range(8):
        inst = windmill_instance(rng)
        res = generic_kernelize(inst, GraphClass.WINDMILL)
        out = res.instance
        assert check_equivalence(inst, out)
        answers.add(brute_force_list_color(inst).yes)
        keep = [v for (v,) in res.origin]
        assert inst.subinstance(keep) == out
        assert recognize(out.remainder(), GraphClass.WINDMILL).member
    assert answers == {True, False}


def test_kernel_keeps_modulator_and_its_induced_graph():
    rng = random.Random(2)
    for _ in range(10):
        inst = windmill_instance(rng, k=rng.randint(0, 3))
        res = generic_kernelize(inst, GraphClass.WINDMILL)
        keep = [v for (v,) in res.origin]
        assert set(inst.modulator) <= set(keep)
        index = {v: i for i, v in enumerate(keep)}
        assert res.instance.modulator == frozenset(index[x] for x in inst.modulator)
        for a, b in combinations(sorted(inst.modulator), 2):
            assert inst.graph.has_edge(a, b) == res.instance.graph.has_edge(index[a], index[b])


def test_fast_marking_keeps_a_superset():
    rng = random.Random(9)
    for _ in range(10):
        inst = windmill_instance(rng)
        slow = generic_kernelize(inst, GraphClass.WINDMILL)
        fast = generic_kernelize(inst, GraphClass.WINDMILL, method="fast")
        assert set(slow.origin) <= set(fast.origin)
        assert check_equivalence(slow.instance, fast.instance)


def test_marking_is_deterministic():
    inst = windmill_instance(random.Random(30))
    a = generic_kernelize(inst, GraphClass.WINDMILL)
    b = generic_kernelize(inst, GraphClass.WINDMILL)
    assert a.instance == b.instance and a.stats == b.stats


def test_generic_preconditions():
    inst = Instance(path_graph(5), 2)
    with pytest.raises(PreconditionError):
        generic_kernelize(inst, GraphClass.INDEPENDENT)
    with pytest.raises(PreconditionError):
        generic_kernelize(inst, GraphClass.LINEAR_FOREST)
    with pytest.raises(PreconditionError):
        generic_kernelize(Instance(path_graph(2), 2, lists=[{1}, {1, 2}]), GraphClass.WINDMILL)
    with pytest.raises(EnvelopeExceeded):
        generic_kernelize(Instance(empty_graph(40), 2), GraphClass.INDEPENDENT)
    with pytest.raises(EnvelopeExceeded):
        generic_kernelize(Instance(star_graph(5), 3), GraphClass.WINDMILL)
    big = Envelope(max_g=7, max_k=4, max_n=30)
    generic_kernelize(Instance(star_graph(5), 3), GraphClass.WINDMILL, envelope=big)


# ---------------------------------------------------------------------------
# vertex cover kernel and its encoding


def test_vc_star_collapses_to_center():
    inst = Instance(star_graph(6), 3, frozenset({0}))
    res = vc_kernelize(inst)
    assert res.instance.n == 1
    assert brute_force_list_color(inst).yes and brute_force_list_color(res.instance).yes


def test_vc_triangle_with_apex_is_k4():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
    inst = Instance(g, 3, frozenset({0, 1, 2}))
    out = vc_kernelize(inst).instance
    assert out.graph == complete_graph(4)
    assert not brute_force_list_color(inst).yes


def test_vc_rejects_non_cover():
    with pytest.raises(PreconditionError):
        vc_kernelize(Instance(path_graph(3), 2, frozenset({0})))


@pytest.mark.parametrize("k,q,bits", [(3, 3, 10), (4, 3, 20)])
def test_encoding_payload_length(k, q, bits):
    edges = set(combinations(range(k), 2))
    n = k
    for sub in combinations(range(k), q):
        edges.update((x, n) for x in sub)
        n += 1
    kernel = Instance(Graph(n, frozenset(edges)), q, frozenset(range(k)))
    enc = encode_vc_kernel(kernel)
    assert enc.payload_bits == bits == k * k + math.comb(k, q)
    data = enc.to_bytes()
    assert len(data) == HEADER_BYTES + (bits + 7) // 8
    assert decode_vc_kernel(data) == kernel


def test_encoding_empty_kernel_is_header_only():
    kernel = Instance(Graph(0, frozenset()), 3, frozenset())
    data = encode_vc_kernel(kernel).to_bytes()
    assert data == bytes(4) + (3).to_bytes(4, "big")
    assert decode_vc_kernel(data) == kernel


def test_encoding_byte_layout():
    # k=2, q=1: X = {0, 1} adjacent; one outside vertex seeing only x0
    kernel = Instance(Graph(3, frozenset({(0, 1), (0, 2)})), 1, frozenset({0, 1}))
    data = encode_vc_kernel(kernel).to_bytes()
    # adjacency 0110, subsets {0}:1 {1}:0, then two zero padding bits
    assert data == bytes([0, 0, 0, 2, 0, 0, 0, 1, 0b01101000])


def test_decoding_rejects_malformed_input():
    with pytest.raises(ValueError):
        VcKernelEncoding.from_bytes(b"\x00\x00")
    with pytest.raises(ValueError):
        VcKernelEncoding.from_bytes(bytes([0, 0, 0, 2, 0, 0, 0, 1, 0b01101001]))
    with pytest.raises(ValueError):
        decode_vc_kernel(bytes([0, 0, 0, 2, 0, 0, 0, 1, 0b01001000]))


def test_encoding_rejects_non_canonical_kernels():
    with pytest.raises(PreconditionError):
        encode_vc_kernel(Instance(path_graph(3), 2, frozenset({1})))


@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(0, 6))
def test_vc_kernel_bounds_and_round_trip(seed, q, k):
    rng = random.Random(seed)
    inst = vc_instance(rng, q, k, k + rng.randint(0, 8))
    res = vc_kernelize(inst)
    out = res.instance
    assert out.n <= k + math.comb(k, q) <= k + k**q
    nbhds = [tuple(sorted(out.graph.adj[v])) for v in range(k, out.n)]
    assert all(len(nb) == q for nb in nbhds)
    assert len(set(nbhds)) == len(nbhds)
    enc = encode_vc_kernel(out)
    assert enc.payload_bits == k * k + math.comb(k, q)
    assert decode_vc_kernel(enc.to_bytes()) == out


def test_vc_kernel_equivalence():
    rng = random.Random(17)
    for _ in range(30):
        q = rng.choice([2, 3])
        k = rng.randint(0, 5)
        inst = vc_instance(rng, q, k, k + rng.randint(0, 8))
        assert check_equivalence(inst, vc_kernelize(inst).instance)


# ---------------------------------------------------------------------------
# list lift


def test_lift_p2_with_distinct_singletons():
    inst = Instance(path_graph(2), 2, lists=[{1}, {2}])
    out = lift_list_to_coloring(inst)
    assert out.n == 4 and out.k == 2 and out.full_lists
    assert brute_force_list_color(out).yes


def test_lift_full_lists_adds_bare_palette():
    inst = Instance(cycle_graph(5), 3, frozenset({0}))
    out = lift_list_to_coloring(inst)
    assert out.graph.m == inst.graph.m + 3
    assert out.k == inst.k + 3
    assert check_equivalence(inst, out)


def test_lift_preserves_answers():
    rng = random.Random(40)
    for _ in range(40):
        n = rng.randint(1, 8)
        q = rng.choice([2, 3])
        inst = Instance(random_graph(rng, n, 0.3), q, lists=random_lists(rng, n, q, 0.3))
        out = lift_list_to_coloring(inst)
        assert out.k == inst.k + q
        assert out.remainder() == inst.remainder()
        assert check_equivalence(inst, out)


# ---------------------------------------------------------------------------
# dominated pipeline


def test_find_odd_wheel_examples():
    assert find_odd_wheel(wheel_graph(5)) == 0
    assert find_odd_wheel(cycle_graph(6)) is None
    assert find_odd_wheel(complete_graph(4)) == 0


def test_find_diamond_examples():
    g = Graph(4, complete_graph(4).edges - {(0, 3)})
    assert find_diamond(g) == (0, 3, 1, 2)
    assert find_diamond(path_graph(6)) is None
    assert find_diamond(star_graph(4)) is None
    assert find_diamond(complete_graph(4)) is not None


def test_identify_merges_into_lower_index():
    g = Graph(4, complete_graph(4).edges - {(0, 3)})
    assert identify(g, 0, 3) == complete_graph(3)


def test_k4_gives_constant_no_instance():
    inst = Instance(complete_graph(5), 3, frozenset({4}))
    res = dominated_kernelize_3col(inst)
    assert res.instance == Instance(complete_graph(4), 3)


def test_diamond_remainder_identifies_once():
    g = Graph(4, complete_graph(4).edges - {(0, 3)})
    inst = Instance(g, 3)
    res = dominated_kernelize_3col(inst)
    assert res.stats["identifications"] == 1
    assert res.instance.graph == complete_graph(3)
    assert res.origin == ((0, 3), (1,), (2,))
    assert check_equivalence(inst, res.instance)


def test_windmill_remainder_needs_no_identification():
    rng = random.Random(6)
    for _ in range(10):
        k = rng.randint(0, 3)
        rest = random_windmill(rng, 12 - k, p_blade=0.5)
        inst = attach_modulator(rng, rest, k, p_cross=0.25)
        res = dominated_kernelize_3col(inst)
        if "odd_wheel_hub" in res.stats:
            assert not brute_force_list_color(inst).yes
            continue
        assert res.stats["identifications"] == 0
        assert check_equivalence(inst, res.instance)


def test_each_identification_step_is_safe():
    rng = random.Random(13)
    steps = 0
    for _ in range(40):
        k = rng.randint(0, 2)
        inst = attach_modulator(rng, random_dominated(rng, 10 - k, p=0.35), k, p_cross=0.2)
        g, mod = inst.graph, set(inst.modulator)
        while find_odd_wheel(g) is None:
            rest, kept = g.delete(mod)
            d = find_diamond(rest)
            if d is None:
                break
            u, v = kept[d[0]], kept[d[1]]
            h = identify(g, u, v)
            mod = {w - 1 if w > v else w for w in mod}
            assert check_equivalence(Instance(g, 3), Instance(h, 3))
            assert recognize(h.delete(mod)[0], GraphClass.DOMINATED).member
            g = h
            steps += 1
    assert steps > 5


def test_dominated_pipeline_preconditions():
    with pytest.raises(PreconditionError):
        dominated_kernelize_3col(Instance(path_graph(4), 4))
    with pytest.raises(PreconditionError):
        dominated_kernelize_3col(Instance(path_graph(4), 3))
