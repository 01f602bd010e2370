"""Compact text and JSON formats for graphs.

Text format: ``<n>;<items>`` with comma-separated items, ``u-v`` for an
undirected edge and ``u>v`` for an arc. Whitespace is ignored and the item
list may be empty (``3;``). A file holds one graph per line; blank lines and
lines starting with ``#`` are skipped.
"""

from __future__ import annotations

import json
from typing import Any, Literal, Union

from .errors import InvalidArgumentError, ParseError
from .graphs import OrientedGraph, UndirectedGraph

Graph = Union[UndirectedGraph, OrientedGraph]
Kind = Literal["auto", "undirected", "oriented"]


class _Scanner:
    def __init__(self, text: str, line: int):
        self.text = text
        self.pos = 0
        self.line = line

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, self.line, (self.pos if pos is None else pos) + 1)

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected integer, found {found}")
        return int(self.text[start:self.pos]), start

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1


def parse_graph(text: str, kind: Kind = "auto", line: int = 1) -> Graph:
    """Parse one graph. ``kind`` forces the expected edge syntax."""
    sc = _Scanner(text, line)
    n, _ = sc.integer()
    sc.expect(";")
    items: list[tuple[int, int, str, int]] = []
    while sc.peek():
        u, start = sc.integer()
        op = sc.peek()
        if op not in ("-", ">"):
            raise sc.error(f"expected '-' or '>' after vertex {u}, found {op!r}" if op else "unexpected end of input")
        op_pos = sc.pos
        sc.pos += 1
        v, _ = sc.integer()
        for w, at in ((u, start), (v, sc.pos - len(str(v)))):
            if w >= n:
                raise sc.error(f"vertex {w} out of range for n={n}", at)
        if u == v:
            raise sc.error(f"loop at vertex {u}", start)
        items.append((u, v, op, op_pos))
        if sc.peek() == ",":
            sc.pos += 1
            if not sc.peek():
                raise sc.error("trailing comma")
        elif sc.peek():
            raise sc.error(f"expected ',' or end of input, found {sc.peek()!r}")

    ops = {op for *_, op, _ in items}
    if len(ops) > 1:
        raise ParseError("mixed '-' and '>' items in one graph", line, items[0][3] + 1)
    inferred = "oriented" if ops == {">"} else "undirected" if ops == {"-"} else None
    target = inferred if kind == "auto" else kind
    if target is None:
        target = "undirected"
    if inferred is not None and kind != "auto" and inferred != kind:
        want = "'-' edges" if kind == "undirected" else "'>' arcs"
        raise ParseError(f"expected {kind} graph with {want}", line, items[0][3] + 1)

    if target == "undirected":
        seen: dict[tuple[int, int], int] = {}
        for u, v, _, at in items:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {key[0]}-{key[1]}", line, at + 1)
            seen[key] = at
        return UndirectedGraph(n, tuple(sorted(seen)))

    pairs: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v, _, at in items:
        key = (min(u, v), max(u, v))
        if key in pairs:
            if pairs[key] == (u, v):
                raise ParseError(f"duplicate arc {u}>{v}", line, at + 1)
            raise ParseError(f"bidirected pair between {key[0]} and {key[1]}", line, at + 1)
        pairs[key] = (u, v)
    return OrientedGraph(n, tuple(sorted(pairs.values())))


def parse_undirected(text: str, line: int = 1) -> UndirectedGraph:
    g = parse_graph(text, "undirected", line)
    assert isinstance(g, UndirectedGraph)
    return g


def parse_oriented(text: str, line: int = 1) -> OrientedGraph:
    g = parse_graph(text, "oriented", line)
    assert isinstance(g, OrientedGraph)
    return g


def parse_lines(text: str, kind: Kind = "auto") -> list[Graph]:
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        graphs.append(parse_graph(raw, kind, lineno))
    return graphs


def emit_graph(g: Graph) -> str:
    if isinstance(g, UndirectedGraph):
        return f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.edges)
    return f"{g.n};" + ",".join(f"{u}>{v}" for u, v in g.arcs)


def graph_to_json(g: Graph) -> dict[str, Any]:
    if isinstance(g, UndirectedGraph):
        return {"n": g.n, "edges": [list(e) for e in g.edges]}
    return {"n": g.n, "arcs": [list(a) for a in g.arcs]}


def graph_from_json(obj: dict[str, Any]) -> Graph:
    if "edges" in obj and "arcs" in obj:
        raise InvalidArgumentError("graph JSON must have either 'edges' or 'arcs', not both")
    if "arcs" in obj:
        return OrientedGraph.from_arcs(int(obj["n"]), obj["arcs"])
    return UndirectedGraph.from_edges(int(obj["n"]), obj.get("edges", []))


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_json(g), separators=(",", ":"))
