import random

import pytest
from hypothesis import strategies as st

from orientfree.graphs import OrientedGraph, UndirectedGraph


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("ORIENT_CACHE_DIR", str(tmp_path / "cache"))


@st.composite
def undirected_graphs(draw, max_n=6, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return UndirectedGraph.from_edges(n, chosen)


@st.composite
def oriented_graphs(draw, max_n=6, min_n=0):
    g = draw(undirected_graphs(max_n=max_n, min_n=min_n))
    flips = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    return OrientedGraph.from_arcs(g.n, [(v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips)])


def random_digraph(rng: random.Random, n: int, p: float) -> OrientedGraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph.from_arcs(n, arcs)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, detail = RESULTS[number]
        terminalreporter.write_line(f"CRITERION {number}: {'PASS' if ok else 'FAIL'} - {detail}")
