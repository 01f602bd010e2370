"""Exact counts of H-free orientations, F-free subgraphs and extremal numbers.

The pruned counters walk the edges of the host in canonical order. After
each edge is fixed they ask whether the new arc (or edge) completes a copy
of the pattern; containment is monotone under adding arcs, so such a
branch and everything below it can be dropped. Oracles enumerate all
``2**m`` assignments and test each with the brute-force containment check.
"""

from __future__ import annotations

import enum
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any

from .canon import all_graphs, canonical_order, hereditary_graphs
from .classifiers import is_forest
from .errors import ResourceLimitError
from .graphs import OrientedGraph, UndirectedGraph, complete_graph, realize_mask
from .subgraph import ArcRootedFinder, contains_directed_oracle, contains_undirected, contains_undirected_oracle
from .textio import graph_to_json


class Method(str, enum.Enum):
    PRUNED = "pruned"
    ORACLE = "oracle"


@dataclass(frozen=True)
class Caps:
    """Size limits; exceeding one raises :class:`ResourceLimitError`."""

    dnh_vertices: int = 7
    ex_vertices: int = 8
    nnf_vertices: int = 6
    forest_vertices: int = 7
    tree_vertices: int = 10**6
    shatter_ground: int = 22
    completion_edges: int = 24
    path_vertices: int = 20
    regular_pair_vertices: int = 26


DEFAULT_CAPS = Caps()


@dataclass
class CountReport:
    value: int
    method: Method
    witness: UndirectedGraph | None = None
    elapsed: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def elapsed_ms(self) -> int:
        return int(round(self.elapsed * 1000))

    def to_json(self, meta: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "value": str(self.value),
            "method": self.method.value,
            "witness": graph_to_json(self.witness) if self.witness is not None else None,
        }
        if meta:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _check_cap(name: str, limit: int, requested: int) -> None:
    if requested > limit:
        raise ResourceLimitError(name, limit, requested)


# ---------------------------------------------------------------------------
# D(G, H): orientations


def _orient_dfs(n: int, edges: tuple, finder: ArcRootedFinder, out: list[int], inn: list[int],
                i: int, collect: list[int] | None, mask: int) -> int:
    if i == len(edges):
        if collect is not None:
            collect.append(mask)
        return 1
    u, v = edges[i]
    total = 0
    for bit, (a, b) in ((0, (u, v)), (1, (v, u))):
        out[a] |= 1 << b
        inn[b] |= 1 << a
        if not finder.through(n, out, inn, a, b):
            total += _orient_dfs(n, edges, finder, out, inn, i + 1, collect, mask | (bit << i))
        out[a] &= ~(1 << b)
        inn[b] &= ~(1 << a)
    return total


def _orient_subtree(g: UndirectedGraph, h: OrientedGraph, depth: int, prefix: int,
                    collect: list[int] | None = None) -> int:
    """Count H-free orientations whose first ``depth`` bits equal ``prefix``."""
    finder = ArcRootedFinder.for_digraph(h)
    out = [0] * g.n
    inn = [0] * g.n
    for i in range(depth):
        u, v = g.edges[i]
        a, b = (v, u) if prefix >> i & 1 else (u, v)
        out[a] |= 1 << b
        inn[b] |= 1 << a
        if finder.through(g.n, out, inn, a, b):
            return 0
    return _orient_dfs(g.n, g.edges, finder, out, inn, depth, collect, prefix)


def _subtree_task(args: tuple) -> int:
    g, h, depth, prefix = args
    return _orient_subtree(g, h, depth, prefix)


def h_free_orientation_masks(g: UndirectedGraph, h: OrientedGraph) -> list[int]:
    """Bit masks (bit i = orientation bit of edge i) of all H-free orientations, ascending."""
    if h.m == 0:
        return [] if h.n <= g.n else list(range(1 << g.m))
    found: list[int] = []
    _orient_subtree(g, h, 0, 0, found)
    return sorted(found)


def count_h_free_orientations(g: UndirectedGraph, h: OrientedGraph, method: Method = Method.PRUNED,
                              workers: int = 1) -> CountReport:
    """D(G, H). With ``workers > 1`` the search tree is split on the first
    ``ceil(log2(workers))`` edge bits and the subtrees summed."""
    t0 = time.perf_counter()
    method = Method(method)
    if method is Method.ORACLE:
        value = sum(
            1 for mask in range(1 << g.m) if contains_directed_oracle(realize_mask(g, mask), h) is None
        )
    elif h.m == 0:
        value = 0 if h.n <= g.n else 1 << g.m
    else:
        depth = min(g.m, math.ceil(math.log2(workers))) if workers > 1 else 0
        tasks = [(g, h, depth, prefix) for prefix in range(1 << depth)]
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                value = sum(pool.map(_subtree_task, tasks))
        else:
            value = sum(_subtree_task(t) for t in tasks)
    return CountReport(value, method, None, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# N(G, F): spanning subgraphs


def _subgraph_dfs(n: int, edges: tuple, finder: ArcRootedFinder, adj: list[int], i: int) -> int:
    if i == len(edges):
        return 1
    total = _subgraph_dfs(n, edges, finder, adj, i + 1)
    u, v = edges[i]
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    if not finder.through(n, adj, adj, u, v):
        total += _subgraph_dfs(n, edges, finder, adj, i + 1)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return total


def count_f_free_subgraphs(g: UndirectedGraph, f: UndirectedGraph,
                           method: Method = Method.PRUNED) -> CountReport:
    """N(G, F): edge subsets S of G with (V(G), S) F-free."""
    t0 = time.perf_counter()
    method = Method(method)
    if method is Method.ORACLE:
        value = sum(
            1 for mask in range(1 << g.m) if contains_undirected_oracle(g.edge_subgraph(mask), f) is None
        )
    elif f.m == 0:
        value = 0 if f.n <= g.n else 1 << g.m
    else:
        finder = ArcRootedFinder.for_graph(f)
        value = _subgraph_dfs(g.n, g.edges, finder, [0] * g.n, 0)
    return CountReport(value, method, None, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# Maxima and labeled counts over n-vertex graphs


def d_n_h(n: int, h: OrientedGraph, caps: Caps = DEFAULT_CAPS, method: Method = Method.PRUNED,
          workers: int = 1) -> CountReport:
    """D(n, H) = max D(G, H) over n-vertex G, with a maximizing witness.

    Graphs are scanned by decreasing edge count; one with ``2**m`` not above
    the best value so far cannot beat it and is skipped (pruned method only).
    The witness is the first maximizer in that order.
    """
    _check_cap("dnh_vertices", caps.dnh_vertices, n)
    t0 = time.perf_counter()
    method = Method(method)
    graphs = sorted(all_graphs(n), key=lambda g: -g.m)
    best = -1
    witness = None
    for g in graphs:
        if method is Method.PRUNED and best >= 1 << g.m:
            continue
        value = count_h_free_orientations(g, h, method, workers).value
        if value > best:
            best, witness = value, g
    return CountReport(best, method, witness, time.perf_counter() - t0)


def ex(n: int, f: UndirectedGraph, caps: Caps = DEFAULT_CAPS, method: Method = Method.PRUNED) -> CountReport:
    """Turan number ex(n, F) with an extremal witness."""
    _check_cap("ex_vertices", caps.ex_vertices, n)
    t0 = time.perf_counter()
    method = Method(method)
    if method is Method.ORACLE:
        full = complete_graph(n)
        best, best_mask = -1, 0
        for mask in range(1 << full.m):
            size = mask.bit_count()
            if size > best and contains_undirected_oracle(full.edge_subgraph(mask), f) is None:
                best, best_mask = size, mask
        witness = full.edge_subgraph(best_mask)
    else:
        full = complete_graph(n)
        if contains_undirected(full, f) is None:
            witness = full
        else:
            free = hereditary_graphs(n, lambda g: contains_undirected(g, f) is None)
            top = max(g.m for g in free)
            witness = next(g for g in free if g.m == top)
        best = witness.m
    return CountReport(best, method, witness, time.perf_counter() - t0)


def n_n_f(n: int, f: UndirectedGraph, caps: Caps = DEFAULT_CAPS, method: Method = Method.PRUNED) -> CountReport:
    """N(n, F): number of F-free labeled graphs on vertex set {0..n-1}."""
    _check_cap("nnf_vertices", caps.nnf_vertices, n)
    rep = count_f_free_subgraphs(complete_graph(n), f, method)
    return rep


# ---------------------------------------------------------------------------
# Oriented forests


def enumerate_oriented_forests(k: int, caps: Caps = DEFAULT_CAPS) -> list[OrientedGraph]:
    """All oriented forests on exactly ``k`` vertices, one per isomorphism class.

    Sorted by (arc count, canonical code); each is the canonical relabelling.
    """
    _check_cap("forest_vertices", caps.forest_vertices, k)
    classes: dict[int, OrientedGraph] = {}
    for f in hereditary_graphs(k, is_forest):
        for mask in range(1 << f.m):
            h = realize_mask(f, mask)
            code, order = canonical_order(h.n, h.out_adj, h.in_adj)
            if code in classes:
                continue
            pos = {v: i for i, v in enumerate(order)}
            classes[code] = OrientedGraph.from_arcs(h.n, ((pos[u], pos[v]) for u, v in h.arcs))
    return [h for _, h in sorted(classes.items(), key=lambda kv: (kv[1].m, kv[0]))]


def oriented_forests_oracle(k: int) -> list[OrientedGraph]:
    """Independent slow listing: all labeled oriented forests, deduplicated by
    trying every vertex permutation. Only practical for ``k <= 5``."""
    from itertools import combinations

    pairs = list(combinations(range(k), 2))
    reps: list[frozenset] = []
    out = []
    for edge_mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if edge_mask >> i & 1]
        g = UndirectedGraph(k, tuple(edges))
        if not is_forest(g):
            continue
        for omask in range(1 << len(edges)):
            arcs = frozenset((v, u) if omask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges))
            if any(
                len(r) == len(arcs) and any(frozenset((p[u], p[v]) for u, v in arcs) == r for p in permutations(range(k)))
                for r in reps
            ):
                continue
            reps.append(arcs)
            out.append(OrientedGraph.from_arcs(k, arcs))
    return out
