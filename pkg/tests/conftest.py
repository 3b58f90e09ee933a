import pytest
from hypothesis import strategies as st

from rgg.graph import Graph, edge_order

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    code = draw(st.integers(0, (1 << m) - 1)) if m else 0
    return Graph.from_code(n, code)


@st.composite
def graphs_any_density(draw, min_n=0, max_n=30):
    from rgg.gnp import GnpParams, sample

    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.02, 0.1, 0.3, 0.5, 0.7, 0.9, 0.98]))
    seed = draw(st.integers(0, 2**32))
    return sample(GnpParams(n, p, seed), 0)


@st.composite
def graphs_with_perm(draw, min_n=0, max_n=10):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def c4():
    from rgg.graph import cycle_graph

    return cycle_graph(4)


__all__ = ["graphs", "graphs_any_density", "graphs_with_perm", "edge_order"]
