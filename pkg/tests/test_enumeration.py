import json
from pathlib import Path

import pytest
from hypothesis import given, settings

import oracles
from conftest import oriented_graphs, undirected_graphs
from orientfree.canon import digraph_certificate
from orientfree.enumeration import (
    Caps,
    CountReport,
    Method,
    count_f_free_subgraphs,
    count_h_free_orientations,
    d_n_h,
    enumerate_oriented_forests,
    ex,
    h_free_orientation_masks,
    n_n_f,
    oriented_forests_oracle,
)
from orientfree.errors import ResourceLimitError
from orientfree.graphs import (
    OrientedGraph,
    UndirectedGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    directed_cycle,
    directed_path,
    empty_graph,
    path_graph,
    q_path,
    realize_mask,
    transitive_tournament,
    turan_edges,
    underlying,
)
from orientfree.subgraph import contains_directed, contains_undirected

GOLDEN = Path(__file__).parent / "golden"


def test_count_examples():
    assert count_h_free_orientations(complete_graph(3), directed_cycle(3)).value == 6
    assert count_h_free_orientations(complete_graph(3), transitive_tournament(3)).value == 2
    assert count_h_free_orientations(empty_graph(0), directed_cycle(3)).value == 1
    # F-free host: every orientation is H-free
    assert count_h_free_orientations(cycle_graph(6), directed_cycle(3)).value == 1 << 6


def test_subgraph_count_examples():
    assert count_f_free_subgraphs(complete_graph(3), complete_graph(3)).value == 7
    assert count_f_free_subgraphs(complete_bipartite(2, 3), complete_graph(3)).value == 1 << 6
    assert count_f_free_subgraphs(complete_graph(2), complete_graph(2)).value == 1


def test_edgeless_patterns():
    g = complete_graph(3)
    assert count_h_free_orientations(g, OrientedGraph(3)).value == 0
    assert count_h_free_orientations(g, OrientedGraph(4)).value == 8
    assert count_f_free_subgraphs(g, UndirectedGraph(2)).value == 0
    assert h_free_orientation_masks(g, OrientedGraph(4)) == list(range(8))


def test_d_n_h_examples():
    rep = d_n_h(3, directed_cycle(3))
    assert rep.value == 6 and rep.witness == complete_graph(3)
    assert d_n_h(3, transitive_tournament(3)).value == 4 == 1 << turan_edges(3, 2)
    rep = d_n_h(4, directed_cycle(3))
    assert rep.value == 24 and rep.witness == complete_graph(4)


def test_d_n_h_cap():
    with pytest.raises(ResourceLimitError, match="dnh_vertices"):
        d_n_h(8, directed_cycle(3))
    with pytest.raises(ResourceLimitError):
        ex(9, complete_graph(3))
    with pytest.raises(ResourceLimitError):
        n_n_f(7, complete_graph(3))
    assert d_n_h(3, directed_cycle(3), Caps(dnh_vertices=3)).value == 6


def test_ex_examples():
    assert ex(3, complete_graph(3)).value == 2
    assert ex(4, complete_graph(3)).value == 4
    rep = ex(6, path_graph(4))
    assert rep.value == 6
    assert contains_undirected(rep.witness, path_graph(4)) is None
    assert sorted(len(c) for c in rep.witness.components()) == [3, 3]


def test_ex_oracle_agrees():
    for n in range(1, 6):
        for f in (complete_graph(3), path_graph(3), path_graph(4), cycle_graph(4)):
            assert ex(n, f).value == ex(n, f, method=Method.ORACLE).value == oracles.ex(n, f.n, f.edges)


def test_n_n_f_examples():
    assert n_n_f(3, complete_graph(3)).value == 7
    assert all(n_n_f(n, complete_graph(2)).value == 1 for n in range(2, 7))
    assert n_n_f(4, complete_graph(3)).value == 41
    assert n_n_f(4, complete_graph(3), method=Method.ORACLE).value == 41


def test_report_json():
    rep = d_n_h(3, directed_cycle(3))
    data = rep.to_json()
    assert data["value"] == "6" and data["method"] == "pruned"
    assert data["witness"] == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
    assert isinstance(data["elapsed_ms"], int)
    assert "elapsed_ms" not in rep.to_json(meta=False)
    big = CountReport(1 << 200, Method.PRUNED)
    assert big.to_json()["value"] == str(1 << 200)


def test_golden_exact_values():
    golden = json.loads((GOLDEN / "exact_values.json").read_text())
    pats = {"C3": directed_cycle(3), "TT3": transitive_tournament(3)}
    for key, value in golden.items():
        n, name = key[2:-1].split(",")
        assert str(d_n_h(int(n), pats[name]).value) == value, key


def test_golden_small_tables():
    golden = json.loads((GOLDEN / "small_tables.json").read_text())
    pats = {"C5": directed_cycle(5), "P2": directed_path(2), "P3": directed_path(3)}
    for key, value in golden.items():
        n, name = key[2:-1].split(",")
        assert str(d_n_h(int(n), pats[name]).value) == value, key


@settings(max_examples=60, deadline=None)
@given(undirected_graphs(max_n=5), oriented_graphs(max_n=4, min_n=2))
def test_pruned_matches_oracle(g, h):
    fast = count_h_free_orientations(g, h).value
    assert fast == count_h_free_orientations(g, h, Method.ORACLE).value
    assert fast <= 1 << g.m


@settings(max_examples=40, deadline=None)
@given(undirected_graphs(max_n=5), oriented_graphs(max_n=4, min_n=2))
def test_pruned_matches_networkx(g, h):
    assert count_h_free_orientations(g, h).value == oracles.count_free_orientations(g.n, g.edges, h.n, h.arcs)


@settings(max_examples=60, deadline=None)
@given(undirected_graphs(max_n=5), undirected_graphs(max_n=4, min_n=2))
def test_subgraph_count_matches_oracle(g, f):
    fast = count_f_free_subgraphs(g, f).value
    assert fast == count_f_free_subgraphs(g, f, Method.ORACLE).value
    assert fast == oracles.count_free_subgraphs(g.n, g.edges, f.n, f.edges)


@settings(max_examples=60, deadline=None)
@given(undirected_graphs(max_n=5), oriented_graphs(max_n=4, min_n=2))
def test_kozma_moran_inequality_and_reversal(g, h):
    d = count_h_free_orientations(g, h).value
    assert d <= count_f_free_subgraphs(g, underlying(h)).value
    assert d == count_h_free_orientations(g, h.reverse()).value


def test_masks_are_exactly_the_free_orientations():
    g = complete_graph(4)
    masks = h_free_orientation_masks(g, directed_cycle(3))
    assert masks == sorted(masks)
    expected = [m for m in range(1 << g.m) if contains_directed(realize_mask(g, m), directed_cycle(3)) is None]
    assert masks == expected


@pytest.mark.parametrize("h", [directed_path(2), directed_path(3), q_path(), transitive_tournament(3)])
def test_trivial_lower_bounds(h):
    f = underlying(h)
    for n in range(2, 6):
        e = ex(n, f).value
        assert d_n_h(n, h).value >= 1 << e
        if n <= 5:
            assert n_n_f(n, f).value >= 1 << e


def test_worker_split_is_deterministic():
    g = complete_graph(6)
    for h in (directed_cycle(3), directed_path(3)):
        values = {count_h_free_orientations(g, h, workers=t).value for t in (1, 2, 4)}
        assert len(values) == 1


def test_oriented_forest_counts():
    counts = [len(enumerate_oriented_forests(k)) for k in range(0, 7)]
    assert counts == [1, 1, 2, 5, 14, 44, 150]
    assert [len(oriented_forests_oracle(k)) for k in range(0, 5)] == counts[:5]


def test_oriented_forest_examples():
    two = enumerate_oriented_forests(2)
    assert [h.m for h in two] == [0, 1]
    three = enumerate_oriented_forests(3)
    certs = {digraph_certificate(h) for h in three}
    for shape in ([(0, 1), (0, 2)], [(1, 0), (2, 0)], [(0, 1), (1, 2)]):
        assert digraph_certificate(OrientedGraph.from_arcs(3, shape)) in certs
    for k in range(1, 6):
        for h in enumerate_oriented_forests(k):
            f = underlying(h)
            assert h.n == k and f.m == f.n - len(f.components())
    with pytest.raises(ResourceLimitError):
        enumerate_oriented_forests(8)
