"""Non-induced subgraph containment for digraphs and undirected graphs.

The search maps pattern vertices one at a time in a connectivity-first
order: each vertex after the first is adjacent to an already placed one
whenever the pattern is connected, so the candidate set for a vertex is
the intersection of neighbour masks of placed images. Candidates are also
filtered by in/out degree. Candidates are tried in increasing host index,
so the returned embedding is the first one under the fixed order.

Undirected graphs go through the same engine with symmetric masks
(``out == in == adj``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graphs import OrientedGraph, UndirectedGraph


@dataclass(frozen=True)
class Embedding:
    """``mapping[p]`` is the host vertex assigned to pattern vertex ``p``."""

    mapping: tuple[int, ...]


def _order(n: int, p_out: Sequence[int], p_in: Sequence[int], start: Sequence[int] = ()) -> list[int]:
    und = [p_out[v] | p_in[v] for v in range(n)]
    deg = [u.bit_count() for u in und]
    order = list(start)
    placed = 0
    for v in order:
        placed |= 1 << v
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed >> v & 1:
                continue
            key = ((und[v] & placed).bit_count(), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        assert best is not None
        order.append(best)
        placed |= 1 << best
    return order


class _Plan:
    """Precomputed constraint lists for one pattern vertex order."""

    __slots__ = ("order", "preds_out", "preds_in", "outdeg", "indeg", "size")

    def __init__(self, n: int, p_out: Sequence[int], p_in: Sequence[int], order: list[int]):
        pos = {v: i for i, v in enumerate(order)}
        self.order = order
        self.size = n
        self.preds_out: list[tuple[int, ...]] = []
        self.preds_in: list[tuple[int, ...]] = []
        self.outdeg = [p_out[v].bit_count() for v in order]
        self.indeg = [p_in[v].bit_count() for v in order]
        for i, v in enumerate(order):
            # image(v) must be an out-neighbour of image(u) for every placed in-neighbour u
            self.preds_out.append(tuple(pos[u] for u in range(n) if p_in[v] >> u & 1 and pos[u] < i))
            self.preds_in.append(tuple(pos[u] for u in range(n) if p_out[v] >> u & 1 and pos[u] < i))

    def candidates(self, i: int, images: list[int], used: int, full: int,
                   h_out: Sequence[int], h_in: Sequence[int]) -> int:
        cand = full & ~used
        for j in self.preds_out[i]:
            cand &= h_out[images[j]]
        for j in self.preds_in[i]:
            cand &= h_in[images[j]]
        return cand

    def extend(self, i: int, images: list[int], used: int, full: int,
               h_out: Sequence[int], h_in: Sequence[int]) -> bool:
        if i == self.size:
            return True
        cand = self.candidates(i, images, used, full, h_out, h_in)
        od = self.outdeg[i]
        idg = self.indeg[i]
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            if h_out[x].bit_count() < od or h_in[x].bit_count() < idg:
                continue
            images[i] = x
            if self.extend(i + 1, images, used | low, full, h_out, h_in):
                return True
        return False


def _bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _find(hn: int, h_out: Sequence[int], h_in: Sequence[int],
          pn: int, p_out: Sequence[int], p_in: Sequence[int]) -> Embedding | None:
    if pn > hn:
        return None
    plan = _Plan(pn, p_out, p_in, _order(pn, p_out, p_in))
    images = [0] * pn
    if not plan.extend(0, images, 0, (1 << hn) - 1, h_out, h_in):
        return None
    mapping = [0] * pn
    for i, v in enumerate(plan.order):
        mapping[v] = images[i]
    return Embedding(tuple(mapping))


def contains_directed(host: OrientedGraph, pattern: OrientedGraph) -> Embedding | None:
    """Return an embedding of ``pattern`` into ``host`` respecting arc directions, or None."""
    return _find(host.n, host.out_adj, host.in_adj, pattern.n, pattern.out_adj, pattern.in_adj)


def contains_undirected(host: UndirectedGraph, pattern: UndirectedGraph) -> Embedding | None:
    return _find(host.n, host.adj, host.adj, pattern.n, pattern.adj, pattern.adj)


def contains_directed_oracle(host: OrientedGraph, pattern: OrientedGraph) -> Embedding | None:
    """Brute force over all injections in lexicographic order."""
    for images in permutations(range(host.n), pattern.n):
        if all(host.has_arc(images[u], images[v]) for u, v in pattern.arcs):
            return Embedding(tuple(images))
    return None


def contains_undirected_oracle(host: UndirectedGraph, pattern: UndirectedGraph) -> Embedding | None:
    for images in permutations(range(host.n), pattern.n):
        if all(host.has_edge(images[u], images[v]) for u, v in pattern.edges):
            return Embedding(tuple(images))
    return None


def is_directed_embedding(host: OrientedGraph, pattern: OrientedGraph, emb: Embedding) -> bool:
    m = emb.mapping
    if len(m) != pattern.n or len(set(m)) != len(m) or any(not 0 <= x < host.n for x in m):
        return False
    return all(host.has_arc(m[u], m[v]) for u, v in pattern.arcs)


def is_undirected_embedding(host: UndirectedGraph, pattern: UndirectedGraph, emb: Embedding) -> bool:
    m = emb.mapping
    if len(m) != pattern.n or len(set(m)) != len(m) or any(not 0 <= x < host.n for x in m):
        return False
    return all(host.has_edge(m[u], m[v]) for u, v in pattern.edges)


class ArcRootedFinder:
    """Detect copies of a pattern that use one specific host arc.

    Used by incremental searches: when a host that was pattern-free gains
    the arc ``a -> b``, any new copy must map some pattern arc onto it.
    Masks passed in may be mutable lists that the caller updates in place.
    """

    def __init__(self, pn: int, p_out: Sequence[int], p_in: Sequence[int]):
        self.pn = pn
        self.plans: list[_Plan] = []
        for p in range(pn):
            for q in _bits_of(p_out[p]):
                self.plans.append(_Plan(pn, p_out, p_in, _order(pn, p_out, p_in, (p, q))))
        self.arcless = not self.plans

    @classmethod
    def for_digraph(cls, pattern: OrientedGraph) -> ArcRootedFinder:
        return cls(pattern.n, pattern.out_adj, pattern.in_adj)

    @classmethod
    def for_graph(cls, pattern: UndirectedGraph) -> ArcRootedFinder:
        return cls(pattern.n, pattern.adj, pattern.adj)

    def through(self, hn: int, h_out: Sequence[int], h_in: Sequence[int], a: int, b: int) -> bool:
        if self.pn > hn:
            return False
        full = (1 << hn) - 1
        images = [0] * self.pn
        used = (1 << a) | (1 << b)
        for plan in self.plans:
            images[0] = a
            images[1] = b
            if h_out[a].bit_count() < plan.outdeg[0] or h_in[a].bit_count() < plan.indeg[0]:
                continue
            if h_out[b].bit_count() < plan.outdeg[1] or h_in[b].bit_count() < plan.indeg[1]:
                continue
            if plan.extend(2, images, used, full, h_out, h_in):
                return True
        return False
