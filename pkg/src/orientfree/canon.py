"""Canonical labelling and isomorphism-free generation of small graphs.

The canonical form of a (di)graph is the lexicographically smallest
adjacency bit string over the vertex orderings reachable by
individualization-refinement: colour refinement to an equitable partition,
then branch on each vertex of the first non-singleton cell. The set of
leaves is isomorphism invariant, so the minimum is a certificate. Branches
on twin vertices (whose transposition is an automorphism) are skipped since
they yield identical subtrees.

Graphs are handled as digraphs given by out/in neighbour masks; an
undirected graph uses ``out == in == adj``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .graphs import OrientedGraph, UndirectedGraph


def _refine(cells: list[list[int]], out: Sequence[int], inn: Sequence[int]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                o, i = out[v], inn[v]
                sig = tuple((o & m).bit_count() * 1024 + (i & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            else:
                new_cells.append(c)
        cells = new_cells
        if not changed:
            return cells


def _code(order: Sequence[int], out: Sequence[int]) -> int:
    code = 0
    for u in order:
        row = out[u]
        for v in order:
            code = (code << 1) | (row >> v & 1)
    return code


def _twins(u: int, v: int, out: Sequence[int], inn: Sequence[int]) -> bool:
    bu, bv = 1 << u, 1 << v
    if bool(out[u] & bv) != bool(out[v] & bu):
        return False
    keep = ~(bu | bv)
    return (out[u] & keep) == (out[v] & keep) and (inn[u] & keep) == (inn[v] & keep)


def canonical_order(n: int, out: Sequence[int], inn: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(code, order)``; ``order[i]`` is the vertex placed at position ``i``."""
    if n == 0:
        return 0, []
    start = _refine([list(range(n))], out, inn)
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(order, out)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(v, w, out, inn) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(split, out, inn))

    search(start)
    return best[0], best[1]


def canonical_graph(g: UndirectedGraph) -> UndirectedGraph:
    _, order = canonical_order(g.n, g.adj, g.adj)
    pos = {v: i for i, v in enumerate(order)}
    return UndirectedGraph.from_edges(g.n, ((pos[u], pos[v]) for u, v in g.edges))


def graph_certificate(g: UndirectedGraph) -> tuple[int, int]:
    return g.n, canonical_order(g.n, g.adj, g.adj)[0]


def canonical_digraph(h: OrientedGraph) -> OrientedGraph:
    _, order = canonical_order(h.n, h.out_adj, h.in_adj)
    pos = {v: i for i, v in enumerate(order)}
    return OrientedGraph.from_arcs(h.n, ((pos[u], pos[v]) for u, v in h.arcs))


def digraph_certificate(h: OrientedGraph) -> tuple[int, int]:
    return h.n, canonical_order(h.n, h.out_adj, h.in_adj)[0]


def are_isomorphic(g1: UndirectedGraph, g2: UndirectedGraph) -> bool:
    return g1.n == g2.n and g1.m == g2.m and graph_certificate(g1) == graph_certificate(g2)


def _extensions(g: UndirectedGraph) -> Iterator[UndirectedGraph]:
    n = g.n
    for nbrs in range(1 << n):
        adj = list(g.adj) + [nbrs]
        for v in range(n):
            if nbrs >> v & 1:
                adj[v] |= 1 << n
        yield UndirectedGraph.from_adjacency(adj)


def hereditary_graphs(n: int, keep: Callable[[UndirectedGraph], bool]) -> list[UndirectedGraph]:
    """All graphs on ``n`` vertices satisfying ``keep``, one per isomorphism class.

    ``keep`` must be closed under vertex deletion (e.g. F-freeness), since the
    classes are grown one vertex at a time from survivors of the previous
    level. Results are canonical representatives sorted by
    ``(edge count, certificate)``.
    """
    level: dict[int, UndirectedGraph] = {0: UndirectedGraph(0)}
    for size in range(1, n + 1):
        nxt: dict[int, UndirectedGraph] = {}
        for g in level.values():
            for h in _extensions(g):
                code, order = canonical_order(h.n, h.adj, h.adj)
                if code in nxt:
                    continue
                if not keep(h):
                    continue
                pos = {v: i for i, v in enumerate(order)}
                nxt[code] = UndirectedGraph.from_edges(h.n, ((pos[u], pos[v]) for u, v in h.edges))
        level = nxt
    items = sorted(level.items(), key=lambda kv: (kv[1].m, kv[0]))
    return [g for _, g in items]


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[UndirectedGraph, ...]:
    """Every graph on ``n`` vertices up to isomorphism."""
    return tuple(hereditary_graphs(n, lambda g: True))


def connected_graphs(n: int) -> list[UndirectedGraph]:
    return [g for g in all_graphs(n) if g.is_connected()]
