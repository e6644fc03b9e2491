import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from harmpoly.graph import Graph


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graphs_without_isolated(draw, max_n=9):
    g = draw(graphs(max_n=max_n, min_n=2))
    # hang each isolated vertex onto vertex 0 (or 1 if it is vertex 0 itself)
    edges = list(g.edges)
    for v, d in enumerate(g.degrees):
        if d == 0:
            edges.append((v, 1 if v == 0 else 0))
    return Graph(g.n, edges)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    return Graph(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240601)


# acceptance criteria record their outcome here; printed at the end of the run
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[k])
