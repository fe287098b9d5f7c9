import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from colorkernels.graphs import Graph
from colorkernels.oracle import Instance

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def naive_colorable(inst: Instance) -> bool:
    """Plain enumeration of list assignments; independent of the backtracking oracle."""
    for col in itertools.product(*(sorted(s) for s in inst.lists)):
        if all(col[u] != col[v] for u, v in inst.graph.edges):
            return True
    return False


def clique_number(g: Graph) -> int:
    best = 0
    for r in range(1, g.n + 1):
        if any(g.is_clique(c) for c in itertools.combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


def is_induced_p4(g: Graph, quad) -> bool:
    a, b, c, d = quad
    want = {(a, b), (b, c), (c, d)}
    for u, v in itertools.combinations(quad, 2):
        if g.has_edge(u, v) != ((u, v) in want or (v, u) in want):
            return False
    return True


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


# ---------------------------------------------------------------------------
# one summary line per acceptance criterion

_ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        prev = _ACCEPTANCE.get(name)
        if prev is None or prev[0] == "PASS":
            _ACCEPTANCE[name] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split("_")[2])):
        status, secs = _ACCEPTANCE[name]
        number = name.split("_")[2]
        title = " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {number} ({title}): {status} [{secs:.1f}s]")
