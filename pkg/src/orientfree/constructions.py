"""Explicit graph families: matching reversals, universal trees, out-stars.

Universal trees
---------------
``H_{1,t}`` has a root ``v`` with one in-neighbour ``v0`` and ``t``
out-neighbours ``v1..vt``; ``v0`` has ``t`` in-neighbours and every ``vi``
has one out-neighbour and ``t`` further in-neighbours. ``H^-_{1,t}`` drops
the subtree at ``v0``. ``H_{s,t}`` is ``H_{s-1,t}`` with every out-leaf made
the root of a fresh ``H_{1,t}`` and every in-leaf the root of a fresh
``H^-_{1,t}``; the leaf itself is the root of the attached copy, so each
attachment adds ``|V(H_{1,t})| - 1`` (resp. ``|V(H^-_{1,t})| - 1``) vertices.
``H*_{s,t,t'}`` gives every vertex of the penultimate layer ``t'`` out-leaves
instead of ``t``.

The tree is described by four node kinds, which makes it possible to work
with it implicitly (counting, indexing, greedy embedding) far beyond the
materialization cap:

* ``R``  even depth, root of an ``H_{1,t}`` copy: in-child ``P0``, ``t`` out-children ``P1``
* ``Rm`` even depth, root of an ``H^-_{1,t}`` copy: ``t`` out-children ``P1``
* ``P0`` odd depth: ``tau`` in-children ``R``
* ``P1`` odd depth: one out-child ``Rm`` then ``tau`` in-children ``R``

where ``tau`` is ``t`` except ``t'`` on the penultimate layer of ``H*``.
Nodes at depth ``2s`` are leaves (``R`` = out-leaf, ``Rm`` = in-leaf).
Vertices are numbered breadth first from the root (root = 0), children in
the order listed above; a node is addressed by its path of child indices.

A sufficient choice for ``t'`` in the extension argument is
``t' > 2 * |V(H_{s,t})| * k``; it is not claimed to be minimal, and ``t'`` is
a free parameter here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from .classifiers import is_forest, is_one_almost_antidirected
from .errors import InvalidArgumentError, ResourceLimitError
from .graphs import OrientedGraph, UndirectedGraph, underlying
from .subgraph import Embedding

Path = tuple[int, ...]
OUT, IN = "out", "in"


# ---------------------------------------------------------------------------
# Matching-reversal orientations of K_{n/2,n/2}


def matching_reversal_family(n: int) -> Iterator[OrientedGraph]:
    """One orientation of K_{h,h} (h = n/2) per perfect matching.

    Left part ``0..h-1``, right part ``h..2h-1``. Every arc goes left to right
    except the matching ``i <-> h + perm[i]``, which points right to left.
    Matchings follow ``itertools.permutations`` order.
    """
    if n < 2 or n % 2:
        raise InvalidArgumentError(f"n must be even and at least 2 (got {n}); add an isolated vertex for odd n")
    h = n // 2
    for perm in permutations(range(h)):
        arcs = []
        for i in range(h):
            for j in range(h):
                arcs.append((h + j, i) if perm[i] == j else (i, h + j))
        yield OrientedGraph(n, tuple(sorted(arcs)))


def out_star(k: int) -> OrientedGraph:
    if k < 1:
        raise InvalidArgumentError("out-star needs k >= 1")
    return OrientedGraph(k + 1, tuple((0, i) for i in range(1, k + 1)))


# ---------------------------------------------------------------------------
# Universal trees


@dataclass(frozen=True)
class UniversalTreeSpec:
    s: int
    t: int
    tprime: int | None = None

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise InvalidArgumentError("universal tree needs s >= 1 and t >= 1")
        if self.tprime is not None and self.tprime < 1:
            raise InvalidArgumentError("t' must be at least 1")


class ImplicitTree:
    """A universal tree that is never built in full."""

    def __init__(self, s: int, t: int, tprime: int | None = None, root_kind: str = "R"):
        UniversalTreeSpec(s, t, tprime)
        if root_kind not in ("R", "Rm"):
            raise InvalidArgumentError("root kind must be 'R' or 'Rm'")
        self.s = s
        self.t = t
        self.tprime = tprime
        self.root_kind = root_kind
        self.height = 2 * s
        self._desc = lru_cache(maxsize=None)(self._desc_uncached)

    @classmethod
    def of(cls, spec: UniversalTreeSpec) -> ImplicitTree:
        return cls(spec.s, spec.t, spec.tprime)

    def children(self, kind: str, depth: int) -> list[tuple[str, str]]:
        """``(kind, direction)`` per child; direction is relative to the parent."""
        if depth >= self.height:
            return []
        if depth % 2 == 0:
            kids = [("P1", OUT)] * self.t
            return [("P0", IN)] + kids if kind == "R" else kids
        tau = self.tprime if self.tprime is not None and depth == self.height - 1 else self.t
        ins = [("R", IN)] * tau
        return ins if kind == "P0" else [("Rm", OUT)] + ins

    def _desc_uncached(self, kind: str, depth: int, rel: int) -> int:
        if rel == 0:
            return 1
        return sum(self._desc(k, depth + 1, rel - 1) for k, _ in self.children(kind, depth))

    def layer_sizes(self) -> list[int]:
        return [self._desc(self.root_kind, 0, d) for d in range(self.height + 1)]

    def layer_kind_counts(self, depth: int) -> dict[str, int]:
        counts = {self.root_kind: 1}
        for d in range(depth):
            nxt: dict[str, int] = {}
            for kind, c in counts.items():
                for k, _ in self.children(kind, d):
                    nxt[k] = nxt.get(k, 0) + c
            counts = nxt
        return counts

    def counts(self) -> tuple[int, int, int]:
        """(vertices, out-leaves, in-leaves)."""
        leaves = self.layer_kind_counts(self.height)
        return sum(self.layer_sizes()), leaves.get("R", 0), leaves.get("Rm", 0)

    def kind(self, path: Path) -> str:
        kind = self.root_kind
        for depth, c in enumerate(path):
            kids = self.children(kind, depth)
            if not 0 <= c < len(kids):
                raise InvalidArgumentError(f"no child {c} at depth {depth}")
            kind = kids[c][0]
        return kind

    def index(self, path: Path) -> int:
        """Breadth-first index of the node at ``path``."""
        d = len(path)
        base = sum(self._desc(self.root_kind, 0, j) for j in range(d))
        pos = 0
        kind = self.root_kind
        for depth, c in enumerate(path):
            kids = self.children(kind, depth)
            for k, _ in kids[:c]:
                pos += self._desc(k, depth + 1, d - depth - 1)
            kind = kids[c][0]
        return base + pos

    def path_of(self, index: int) -> Path:
        if index < 0:
            raise InvalidArgumentError("negative vertex index")
        d = 0
        for size in self.layer_sizes():
            if index < size:
                break
            index -= size
            d += 1
        else:
            raise InvalidArgumentError("vertex index beyond tree size")
        path: list[int] = []
        kind = self.root_kind
        for depth in range(d):
            for c, (k, _) in enumerate(self.children(kind, depth)):
                size = self._desc(k, depth + 1, d - depth - 1)
                if index < size:
                    path.append(c)
                    kind = k
                    break
                index -= size
        return tuple(path)

    def has_arc(self, u: Path, v: Path) -> bool:
        """Whether ``u -> v`` is an arc of the tree."""
        if len(v) == len(u) + 1 and v[:-1] == u:
            return self.children(self.kind(u), len(u))[v[-1]][1] == OUT
        if len(u) == len(v) + 1 and u[:-1] == v:
            return self.children(self.kind(v), len(v))[u[-1]][1] == IN
        return False

    def materialize(self, cap: int = 10**6) -> OrientedGraph:
        total = self.counts()[0]
        if total > cap:
            raise ResourceLimitError("tree_vertices", cap, total)
        arcs = []
        queue = deque([(self.root_kind, 0)])
        next_id = 1
        while queue:
            kind, me = queue.popleft()
            depth = self._depth_of(me)
            for k, direction in self.children(kind, depth):
                arcs.append((me, next_id) if direction == OUT else (next_id, me))
                queue.append((k, next_id))
                next_id += 1
        return OrientedGraph(total, tuple(sorted(arcs)))

    def _depth_of(self, index: int) -> int:
        d = 0
        for size in self.layer_sizes():
            if index < size:
                return d
            index -= size
            d += 1
        raise InvalidArgumentError("vertex index beyond tree size")


def universal_tree(spec: UniversalTreeSpec, cap: int = 10**6) -> OrientedGraph:
    """Materialize ``H_{s,t}`` (or ``H*_{s,t,t'}`` when ``tprime`` is set)."""
    return ImplicitTree.of(spec).materialize(cap)


def universal_tree_minus(t: int, cap: int = 10**6) -> OrientedGraph:
    """Materialize ``H^-_{1,t}``."""
    return ImplicitTree(1, t, root_kind="Rm").materialize(cap)


def count_universal_tree(spec: UniversalTreeSpec) -> tuple[int, int, int]:
    """(vertices, out-leaves, in-leaves) of ``H_{s,t}`` / ``H*_{s,t,t'}`` by the layer recursion.

    Unstarred trees follow V(s) = V(s-1) + out(s-1) (V1 - 1) + in(s-1) (V1m - 1)
    with out(s) = out(s-1) out1 + in(s-1) out1m and in(s) = (out(s-1) + in(s-1)) t,
    where V1 = (t+1)(t+2), out1 = t(t+1), V1m = (t+1)^2, out1m = t^2.
    """
    s, t = spec.s, spec.t
    v1, out1, v1m, out1m = (t + 1) * (t + 2), t * (t + 1), (t + 1) ** 2, t * t
    verts, outs, ins = v1, out1, t
    for _ in range(2, s + 1):
        verts += outs * (v1 - 1) + ins * (v1m - 1)
        outs, ins = outs * out1 + ins * out1m, (outs + ins) * t
    if spec.tprime is None or spec.tprime == t:
        return verts, outs, ins
    # every penultimate vertex trades t out-leaves for t'
    penultimate = ImplicitTree(s, t).layer_sizes()[2 * s - 1]
    extra = penultimate * (spec.tprime - t)
    return verts + extra, outs + extra, ins


# ---------------------------------------------------------------------------
# Greedy embedding of 1-almost antidirected trees and forests


def _require_almost_antidirected_forest(h: OrientedGraph, k: int, connected: bool) -> None:
    f = underlying(h)
    if not is_forest(f):
        raise InvalidArgumentError("pattern is not a forest")
    if connected and h.n > 0 and not f.is_connected():
        raise InvalidArgumentError("pattern is not a tree")
    if connected and h.n > k:
        raise InvalidArgumentError(f"pattern has {h.n} vertices, more than k={k}")
    if not connected:
        comps = f.components()
        if any(len(c) > k for c in comps):
            raise InvalidArgumentError(f"a component has more than k={k} vertices")
        if len(comps) > k * (k + 1):
            raise InvalidArgumentError(f"more than k(k+1)={k * (k + 1)} components")
    if is_one_almost_antidirected(h) is None:
        raise InvalidArgumentError("pattern is not 1-almost antidirected")


def _greedy(tree: ImplicitTree, h: OrientedGraph, vertices: list[int], root: int,
            start: Path, paths: dict[int, Path]) -> None:
    paths[root] = start
    used_children: dict[Path, set[int]] = {}
    queue = deque([root])
    members = set(vertices)
    while queue:
        x = queue.popleft()
        here = paths[x]
        kids = tree.children(tree.kind(here), len(here))
        taken = used_children.setdefault(here, set())
        for y in sorted(members):
            if y in paths:
                continue
            if h.has_arc(x, y):
                want = OUT
            elif h.has_arc(y, x):
                want = IN
            else:
                continue
            slot = next((c for c, (_, d) in enumerate(kids) if d == want and c not in taken), None)
            if slot is None:
                raise AssertionError(f"greedy embedding stuck at host node {here}")
            taken.add(slot)
            paths[y] = here + (slot,)
            queue.append(y)


def greedy_embed_tree_paths(h: OrientedGraph, k: int) -> dict[int, Path]:
    _require_almost_antidirected_forest(h, k, connected=True)
    tree = ImplicitTree(k, k)
    if h.n == 0:
        return {}
    bp = is_one_almost_antidirected(h)
    assert bp is not None
    root = min(bp.class_a)
    paths: dict[int, Path] = {}
    _greedy(tree, h, list(range(h.n)), root, (), paths)
    return paths


def greedy_embed_tree(h: OrientedGraph, k: int) -> Embedding:
    """Embed a 1-almost antidirected tree on at most ``k`` vertices into ``H_{k,k}``.

    The tree is rooted at the smallest class-A vertex of its bipartition and
    mapped onto the root of ``H_{k,k}``; returned indices are breadth-first
    vertex numbers of ``H_{k,k}``.
    """
    paths = greedy_embed_tree_paths(h, k)
    tree = ImplicitTree(k, k)
    return Embedding(tuple(tree.index(paths[v]) for v in range(h.n)))


def forest_subroots(tree: ImplicitTree, count: int) -> list[Path]:
    """The first ``count`` depth-2 nodes of kind ``R``; their subtrees are disjoint copies of ``H_{s-1,t}``."""
    out = []
    for c1, (k1, _) in enumerate(tree.children(tree.root_kind, 0)):
        for c2, (k2, _) in enumerate(tree.children(k1, 1)):
            if k2 == "R":
                out.append((c1, c2))
    if len(out) < count:
        raise AssertionError("not enough disjoint subtrees")
    return out[:count]


def greedy_embed_forest_paths(h: OrientedGraph, k: int) -> dict[int, Path]:
    _require_almost_antidirected_forest(h, k, connected=False)
    if h.n == 0:
        return {}
    tree = ImplicitTree(k + 1, k)
    bp = is_one_almost_antidirected(h)
    assert bp is not None
    comps = underlying(h).components()
    paths: dict[int, Path] = {}
    for comp, start in zip(comps, forest_subroots(tree, len(comps))):
        root = min(v for v in comp if v in bp.class_a)
        _greedy(tree, h, comp, root, start, paths)
    return paths


def greedy_embed_forest(h: OrientedGraph, k: int) -> Embedding:
    """Embed a 1-almost antidirected forest into ``H_{k+1,k}``, one component
    per disjoint depth-2 subtree.

    Each component must have at most ``k`` vertices; there are ``k(k+1)``
    such subtrees, which bounds the number of components.
    """
    paths = greedy_embed_forest_paths(h, k)
    tree = ImplicitTree(k + 1, k)
    return Embedding(tuple(tree.index(paths[v]) for v in range(h.n)))


def validate_implicit_embedding(tree: ImplicitTree, h: OrientedGraph, emb: Embedding) -> bool:
    """Check an embedding into an implicit tree arc by arc, decoding indices to paths."""
    if len(emb.mapping) != h.n or len(set(emb.mapping)) != h.n:
        return False
    try:
        paths = [tree.path_of(x) for x in emb.mapping]
    except InvalidArgumentError:
        return False
    return all(tree.has_arc(paths[u], paths[v]) for u, v in h.arcs)


# ---------------------------------------------------------------------------
# Out-star freeness by simulation


@dataclass(frozen=True)
class StarEstimate:
    probability: float
    successes: int
    trials: int
    base_degree: int
    base_edges: int
    copies: int
    log2_lower_bound: float | None
    target_exponent: float


def near_regular_base(k: int, epsilon: float) -> UndirectedGraph:
    """Circulant ``d``-regular graph on ``2k`` vertices, ``d = floor((1 - eps/2) * 2k)``."""
    if k < 1:
        raise InvalidArgumentError("k must be at least 1")
    d = int(np.floor((1 - epsilon / 2) * 2 * k + 1e-9))
    if not 0 <= d <= 2 * k - 1:
        raise InvalidArgumentError(f"degree {d} infeasible on {2 * k} vertices")
    size = 2 * k
    pairs = set()
    for i in range(size):
        for j in range(1, d // 2 + 1):
            pairs.add((min(i, (i + j) % size), max(i, (i + j) % size)))
    if d % 2:
        for i in range(k):
            pairs.add((i, i + k))
    return UndirectedGraph(size, tuple(sorted(pairs)))


def star_freeness_monte_carlo(k: int, n: int, epsilon: float, trials: int, seed: int = 0) -> StarEstimate:
    """Fraction of uniform random orientations of the base graph with every out-degree below ``k``.

    ``n`` is the size of the host made of ``n / 2k`` disjoint copies of the
    base graph; the reported bound is ``log2`` of the implied number of
    out_star(k)-free orientations of that host, to compare with ``(1 - eps) k n``.
    """
    if trials < 1:
        raise InvalidArgumentError("trials must be positive")
    if n < 2 * k or n % (2 * k):
        raise InvalidArgumentError(f"n={n} must be a positive multiple of 2k={2 * k}")
    base = near_regular_base(k, epsilon)
    d = base.degree(0)
    edges = np.array(base.edges, dtype=np.int64).reshape(-1, 2)
    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(trials):
        flip = rng.integers(0, 2, size=len(edges), dtype=np.int8).astype(bool)
        tails = np.where(flip, edges[:, 1], edges[:, 0])
        if np.bincount(tails, minlength=base.n).max() < k:
            hits += 1
    p = hits / trials
    copies = n // (2 * k)
    bound = copies * (base.m + float(np.log2(p))) if hits else None
    return StarEstimate(p, hits, trials, d, base.m, copies, bound, (1 - epsilon) * k * n)
