"""Graph and orientation data model.

Vertices are the integers ``0..n-1``. An :class:`UndirectedGraph` keeps its
edges as ``(u, v)`` pairs with ``u < v`` in strictly increasing lexicographic
order; that order is the canonical edge order, and bit ``i`` of an
:class:`Orientation` always refers to ``edges[i]``.

Adjacency is also exposed as per-vertex neighbour bitmasks (bit ``w`` of
``adj[v]`` is set iff ``v`` and ``w`` are adjacent). Python integers are
unbounded, so the same representation serves every ``n``; for ``n <= 64``
the masks fit a machine word, beyond that they silently become bignums and
only get slower.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidArgumentError, MalformedOrientationError

Edge = tuple[int, int]
Arc = tuple[int, int]


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise InvalidArgumentError(f"vertex {v} out of range for n={n}")


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgumentError("vertex count must be nonnegative")
        prev: Edge | None = None
        for e in self.edges:
            u, v = e
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u >= v:
                raise InvalidArgumentError(f"edge {e} must satisfy u < v")
            if prev is not None and e <= prev:
                raise InvalidArgumentError("edges must be strictly increasing (duplicate or unsorted)")
            prev = e

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> UndirectedGraph:
        """Build from unordered pairs in any order; loops and duplicates are rejected."""
        seen: set[Edge] = set()
        for pair in pairs:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise InvalidArgumentError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> UndirectedGraph:
        n = len(adj)
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> UndirectedGraph:
        """Subgraph induced on ``vertices``, relabelled by their position."""
        pos = {v: i for i, v in enumerate(vertices)}
        pairs = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return UndirectedGraph.from_edges(len(vertices), pairs)

    def edge_subgraph(self, mask: int) -> UndirectedGraph:
        """Spanning subgraph keeping ``edges[i]`` for every set bit ``i``."""
        return UndirectedGraph(self.n, tuple(e for i, e in enumerate(self.edges) if mask >> i & 1))


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgumentError("vertex count must be nonnegative")
        pairs: set[Edge] = set()
        prev: Arc | None = None
        for a in self.arcs:
            u, v = a
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            if prev is not None and a <= prev:
                raise InvalidArgumentError("arcs must be strictly increasing (duplicate or unsorted)")
            prev = a
            key = (min(u, v), max(u, v))
            if key in pairs:
                raise InvalidArgumentError(f"bidirected pair between {key[0]} and {key[1]}")
            pairs.add(key)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> OrientedGraph:
        seen: set[Arc] = set()
        for a in arcs:
            u, v = int(a[0]), int(a[1])
            if (u, v) in seen:
                raise InvalidArgumentError(f"duplicate arc {(u, v)}")
            seen.add((u, v))
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)

    def out_degree(self, v: int) -> int:
        return self.out_adj[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_adj[v].bit_count()

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def reverse(self) -> OrientedGraph:
        return OrientedGraph.from_arcs(self.n, ((v, u) for u, v in self.arcs))

    def without_arcs(self, drop: Iterable[Arc]) -> OrientedGraph:
        gone = set(drop)
        return OrientedGraph(self.n, tuple(a for a in self.arcs if a not in gone))


@dataclass(frozen=True)
class Orientation:
    """Direction bits for the edges of ``host``: 0 means low->high, 1 means high->low."""

    host: UndirectedGraph
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.host.m:
            raise MalformedOrientationError(
                f"orientation has {len(self.bits)} bits but host has {self.host.m} edges"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise MalformedOrientationError("orientation bits must be 0 or 1")

    @classmethod
    def from_mask(cls, host: UndirectedGraph, mask: int) -> Orientation:
        if mask < 0 or mask >> host.m:
            raise MalformedOrientationError(f"mask {mask} has bits beyond {host.m} edges")
        return cls(host, tuple(mask >> i & 1 for i in range(host.m)))

    @classmethod
    def of(cls, host: UndirectedGraph, digraph: OrientedGraph) -> Orientation:
        """Recover the bits that realize ``digraph`` over ``host``."""
        if underlying(digraph) != host:
            raise MalformedOrientationError("digraph is not an orientation of the host")
        return cls(host, tuple(0 if digraph.has_arc(u, v) else 1 for u, v in host.edges))

    @property
    def mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def underlying(h: OrientedGraph) -> UndirectedGraph:
    return UndirectedGraph.from_edges(h.n, h.arcs)


def realize(o: Orientation) -> OrientedGraph:
    if len(o.bits) != o.host.m:
        raise MalformedOrientationError("bit vector length does not match host edge count")
    arcs = [(v, u) if b else (u, v) for (u, v), b in zip(o.host.edges, o.bits)]
    return OrientedGraph(o.host.n, tuple(sorted(arcs)))


def realize_mask(host: UndirectedGraph, mask: int) -> OrientedGraph:
    return realize(Orientation.from_mask(host, mask))


def turan_parts(n: int, r: int) -> list[int]:
    if n < 0 or r < 0:
        raise InvalidArgumentError("n and r must be nonnegative")
    if r == 0:
        if n > 0:
            raise InvalidArgumentError("Turan graph needs at least one part when n > 0")
        return []
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_graph(n: int, r: int) -> UndirectedGraph:
    """Complete ``r``-partite graph on ``n`` vertices with balanced, contiguous parts."""
    part_of = []
    for i, size in enumerate(turan_parts(n, r)):
        part_of.extend([i] * size)
    return UndirectedGraph(n, tuple((u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]))


def turan_edges(n: int, r: int) -> int:
    parts = turan_parts(n, r)
    return (n * n - sum(p * p for p in parts)) // 2


# Named families used across the package and its tests.

def empty_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n)


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> UndirectedGraph:
    """Undirected path on ``n`` vertices (``n - 1`` edges)."""
    return UndirectedGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise InvalidArgumentError("a cycle needs at least 3 vertices")
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> UndirectedGraph:
    return UndirectedGraph(a + b, tuple((u, v) for u in range(a) for v in range(a, a + b)))


def directed_cycle(k: int) -> OrientedGraph:
    if k < 3:
        raise InvalidArgumentError("a directed cycle needs at least 3 vertices")
    return OrientedGraph.from_arcs(k, [(i, (i + 1) % k) for i in range(k)])


def transitive_tournament(k: int) -> OrientedGraph:
    return OrientedGraph(k, tuple(combinations(range(k), 2)))


def directed_path(k: int) -> OrientedGraph:
    """The directed path P_k with ``k`` arcs on ``k + 1`` vertices."""
    return OrientedGraph(k + 1, tuple((i, i + 1) for i in range(k)))


def q_path() -> OrientedGraph:
    """Five-vertex oriented path 1->0, 1->2, 2->3, 4->3 that is not 1-almost antidirected."""
    return OrientedGraph.from_arcs(5, [(1, 0), (1, 2), (2, 3), (4, 3)])
