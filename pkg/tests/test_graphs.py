import pytest
from hypothesis import given

from conftest import oriented_graphs, undirected_graphs
from orientfree.errors import InvalidArgumentError, MalformedOrientationError, ParseError
from orientfree.graphs import (
    Orientation,
    OrientedGraph,
    UndirectedGraph,
    complete_graph,
    cycle_graph,
    directed_cycle,
    empty_graph,
    path_graph,
    realize,
    realize_mask,
    turan_edges,
    turan_graph,
    underlying,
)
from orientfree.textio import (
    dumps_graph,
    emit_graph,
    graph_from_json,
    graph_to_json,
    parse_graph,
    parse_lines,
    parse_oriented,
    parse_undirected,
)


def test_underlying_examples():
    assert underlying(directed_cycle(3)) == complete_graph(3)
    assert underlying(OrientedGraph(4)) == empty_graph(4)


def test_realize_examples():
    assert realize(Orientation(complete_graph(2), (0,))).arcs == ((0, 1),)
    tri = realize(Orientation(complete_graph(3), (0, 1, 0)))
    assert set(tri.arcs) == {(0, 1), (2, 0), (1, 2)}
    assert tri == directed_cycle(3)
    assert realize(Orientation(empty_graph(3), ())) == OrientedGraph(3)


def test_orientation_length_mismatch():
    with pytest.raises(MalformedOrientationError):
        Orientation(complete_graph(3), (0, 1))
    with pytest.raises(MalformedOrientationError):
        Orientation.from_mask(complete_graph(2), 2)


def test_orientation_of_roundtrip():
    g = complete_graph(4)
    for mask in range(1 << g.m):
        assert Orientation.of(g, realize_mask(g, mask)).mask == mask
    with pytest.raises(MalformedOrientationError):
        Orientation.of(g, directed_cycle(3))


def test_turan():
    assert turan_edges(3, 2) == 2
    assert turan_edges(4, 2) == 4
    assert all(turan_edges(n, 1) == 0 for n in range(8))
    assert turan_graph(5, 2).m == turan_edges(5, 2) == 6
    assert turan_graph(7, 3).m == turan_edges(7, 3)
    with pytest.raises(InvalidArgumentError):
        turan_graph(3, 0)
    assert turan_graph(0, 0).n == 0


def test_constructor_validation():
    with pytest.raises(InvalidArgumentError):
        UndirectedGraph(3, ((1, 0),))
    with pytest.raises(InvalidArgumentError):
        UndirectedGraph(3, ((0, 1), (0, 1)))
    with pytest.raises(InvalidArgumentError):
        UndirectedGraph(2, ((0, 2),))
    with pytest.raises(InvalidArgumentError):
        OrientedGraph.from_arcs(2, [(0, 1), (1, 0)])
    with pytest.raises(InvalidArgumentError):
        OrientedGraph.from_arcs(2, [(1, 1)])
    with pytest.raises(InvalidArgumentError):
        UndirectedGraph.from_edges(3, [(0, 1), (1, 0)])


def test_components_and_helpers():
    g = UndirectedGraph.from_edges(6, [(0, 1), (1, 2), (4, 5)])
    assert g.components() == [[0, 1, 2], [3], [4, 5]]
    assert not g.is_connected()
    assert path_graph(4).is_connected()
    assert cycle_graph(5).m == 5
    assert g.degree(1) == 2 and g.neighbors(1) == [0, 2]
    assert g.edge_subgraph(0b101).edges == ((0, 1), (4, 5))
    assert g.induced([0, 1, 5]).edges == ((0, 1),)


@given(oriented_graphs())
def test_underlying_edge_count(h):
    assert underlying(h).m == h.m
    assert underlying(h).n == h.n


@given(undirected_graphs(max_n=5))
def test_realize_is_injective(g):
    seen = {realize_mask(g, mask).arcs for mask in range(1 << g.m)}
    assert len(seen) == 1 << g.m
    for mask in range(1 << g.m):
        assert underlying(realize_mask(g, mask)) == g


# -- text format ------------------------------------------------------------


def test_parse_examples():
    assert parse_graph("3;0-1,1-2") == path_graph(3)
    assert parse_graph("3;0>1,1>2,2>0") == directed_cycle(3)
    assert parse_graph(" 3 ; 0 > 1 , 1>2 ") == OrientedGraph.from_arcs(3, [(0, 1), (1, 2)])
    assert parse_graph("3;") == empty_graph(3)
    assert parse_oriented("3;") == OrientedGraph(3)


@pytest.mark.parametrize(
    "text, fragment, column",
    [
        ("2;0>1,1>0", "bidirected", 8),
        ("2;0-3", "out of range", 5),
        ("2;1-1", "loop", 3),
        ("3;0-1,1-0", "duplicate", 8),
        ("3;0-1,", "trailing comma", 7),
        ("3;0-1,1>2", "mixed", 4),
        ("3 0-1", "expected ';'", 3),
        ("x;", "expected integer", 1),
        ("3;0-1 1-2", "expected ','", 7),
    ],
)
def test_parse_errors(text, fragment, column):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert fragment in str(info.value)
    assert info.value.column == column
    assert info.value.line == 1


def test_kind_mismatch():
    with pytest.raises(ParseError, match="undirected"):
        parse_undirected("2;0>1")
    with pytest.raises(ParseError, match="oriented"):
        parse_oriented("2;0-1")


def test_parse_lines_reports_line_numbers():
    text = "# corpus\n3;0-1\n\n2;0-1\n3;0>1,1>0\n"
    with pytest.raises(ParseError) as info:
        parse_lines(text)
    assert info.value.line == 5
    assert len(parse_lines(text.rsplit("\n", 2)[0])) == 2


def test_json_roundtrip():
    h = directed_cycle(3)
    assert graph_to_json(h) == {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}
    assert graph_from_json(graph_to_json(h)) == h
    g = path_graph(3)
    assert graph_to_json(g) == {"n": 3, "edges": [[0, 1], [1, 2]]}
    assert graph_from_json(graph_to_json(g)) == g
    assert graph_from_json(__import__("json").loads(dumps_graph(g))) == g


@given(undirected_graphs(max_n=8))
def test_emit_parse_roundtrip_undirected(g):
    assert parse_graph(emit_graph(g), "undirected") == g


@given(oriented_graphs(max_n=8))
def test_emit_parse_roundtrip_oriented(h):
    assert parse_graph(emit_graph(h), "oriented") == h
