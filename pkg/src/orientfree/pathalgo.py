"""State-assignment algorithm for P_k-free orientations and its checkers.

Every vertex carries a state ``(a, b)``. Each step processes one vertex:
either the vertex designated by the previous step, or else the unprocessed
vertex with the largest ``a`` (ties to the smallest index). If the processed
vertex has an unprocessed out-neighbour, the one with the largest ``b``
(ties to the smallest index) is designated next, ``a`` is incremented on
every unprocessed out-neighbour and ``b`` on every unprocessed in-neighbour
whose ``b`` was at most the designated vertex's ``b``. All comparisons in a
step read the states as they were when the step began.

Also here: exhaustive longest-path search, the completion bound check, and
the greedy alternating path for dense bipartite pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .enumeration import DEFAULT_CAPS, Caps, d_n_h, ex, h_free_orientation_masks
from .errors import InvalidArgumentError, ResourceLimitError
from .graphs import OrientedGraph, UndirectedGraph, directed_path, path_graph, realize_mask


@dataclass(frozen=True)
class VertexState:
    a: int = 0
    b: int = 0


@dataclass(frozen=True)
class Step:
    vertex: int
    next_vertex: int | None
    increments: tuple[tuple[int, str], ...]


@dataclass
class Trace:
    order: list[int]
    states: list[VertexState]
    steps: list[Step] = field(default_factory=list)
    # states of every vertex at the start of each step
    snapshots: list[list[VertexState]] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "steps": [
                {
                    "vertex": s.vertex,
                    "next": s.next_vertex,
                    "increments": [[u, f] for u, f in s.increments],
                }
                for s in self.steps
            ],
            "states": [[st.a, st.b] for st in self.states],
        }


def _argmax(candidates: Iterable[int], key: Sequence[int]) -> int:
    best = None
    for v in candidates:
        if best is None or key[v] > key[best]:
            best = v
    assert best is not None
    return best


def run_state_algorithm(d: OrientedGraph) -> Trace:
    n = d.n
    a = [0] * n
    b = [0] * n
    processed = 0
    designated: int | None = None
    order: list[int] = []
    steps: list[Step] = []
    snapshots: list[list[VertexState]] = []
    for _ in range(n):
        snapshots.append([VertexState(a[v], b[v]) for v in range(n)])
        if designated is None:
            v = _argmax((u for u in range(n) if not processed >> u & 1), a)
        else:
            v = designated
        rest = ((1 << n) - 1) & ~processed & ~(1 << v)
        outs = [u for u in range(n) if (d.out_adj[v] & rest) >> u & 1]
        ins = [u for u in range(n) if (d.in_adj[v] & rest) >> u & 1]
        incs: list[tuple[int, str]] = []
        if outs:
            designated = _argmax(outs, b)
            threshold = b[designated]
            bumped_b = [u for u in ins if b[u] <= threshold]
            for u in outs:
                a[u] += 1
                incs.append((u, "a"))
            for u in bumped_b:
                b[u] += 1
                incs.append((u, "b"))
        else:
            designated = None
        processed |= 1 << v
        order.append(v)
        steps.append(Step(v, designated, tuple(incs)))
    return Trace(order, [VertexState(a[v], b[v]) for v in range(n)], steps, snapshots)


def _longest_from(d: OrientedGraph, start: int, reverse: bool) -> int:
    adj = d.in_adj if reverse else d.out_adj
    best = 0
    stack = [(start, 1 << start, 0)]
    while stack:
        v, seen, length = stack.pop()
        if length > best:
            best = length
        nxt = adj[v] & ~seen
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            stack.append((low.bit_length() - 1, seen | low, length + 1))
    return best


def longest_path_ending_at(d: OrientedGraph, v: int) -> int:
    return _longest_from(d, v, reverse=True)


def longest_path_starting_at(d: OrientedGraph, v: int) -> int:
    return _longest_from(d, v, reverse=False)


def longest_directed_path(d: OrientedGraph, caps: Caps = DEFAULT_CAPS) -> int:
    """Maximum number of arcs on a simple directed path."""
    if d.n > caps.path_vertices:
        raise ResourceLimitError("path_vertices", caps.path_vertices, d.n)
    return max((longest_path_starting_at(d, v) for v in range(d.n)), default=0)


def verify_path_to_state(d: OrientedGraph, trace: Trace) -> bool:
    """Every final ``a_v`` is realized by a path ending at ``v``, every ``b_v >= 1``
    by a path with ``b_v - 1`` arcs starting at ``v``."""
    if sorted(trace.order) != list(range(d.n)) or len(trace.states) != d.n:
        raise InvalidArgumentError("trace does not belong to this digraph")
    for v, st in enumerate(trace.states):
        if longest_path_ending_at(d, v) < st.a:
            return False
        if st.b >= 1 and longest_path_starting_at(d, v) < st.b - 1:
            return False
    return True


def completion_bound(states: Sequence[VertexState], remaining: Iterable[int], k: int) -> Fraction:
    bound = Fraction(1)
    for v in remaining:
        bound *= (k + 2) * Fraction(2) ** (2 * k - states[v].a - states[v].b)
    return bound


def verify_completion_bound(g: UndirectedGraph, k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """For every P_k-free orientation and every step, the number of P_k-free
    completions of the edges revealed so far is within the product bound."""
    if g.m > caps.completion_edges:
        raise ResourceLimitError("completion_edges", caps.completion_edges, g.m)
    free = h_free_orientation_masks(g, directed_path(k))
    incident = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    for mask in free:
        trace = run_state_algorithm(realize_mask(g, mask))
        revealed = 0
        for i, v in enumerate(trace.order):
            remaining = trace.order[i:]
            completions = sum(1 for other in free if (other ^ mask) & revealed == 0)
            if completions > completion_bound(trace.snapshots[i], remaining, k):
                return False
            revealed |= incident[v]
    return True


def path_count_bound_check(n: int, k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """D(n, P_k) <= 2^(3kn)."""
    return d_n_h(n, directed_path(k), caps).value <= 1 << (3 * k * n)


# ---------------------------------------------------------------------------
# Dense bipartite pairs


def _check_pair(d: OrientedGraph, w1: Sequence[int], w2: Sequence[int], k: int) -> None:
    if set(w1) & set(w2):
        raise InvalidArgumentError("W1 and W2 must be disjoint")
    if any(not 0 <= v < d.n for v in list(w1) + list(w2)):
        raise InvalidArgumentError("vertex out of range")
    if len(w1) < 2 * k or len(w2) < 2 * k:
        raise InvalidArgumentError(f"both sides need at least 2k={2 * k} vertices")


def _one_direction_ok(d: OrientedGraph, src: Sequence[int], dst: Sequence[int], forward: bool) -> bool:
    """min over X ⊆ src, Y ⊆ dst (large enough) of 10 e(X->Y) - |X||Y| >= 0 (or Y->X if not forward)."""
    lo_src = math.ceil(len(src) / 20)
    lo_dst = math.ceil(len(dst) / 20)
    adj = d.out_adj if forward else d.in_adj
    dst_bits = {y: 1 << y for y in dst}
    for sel in range(1, 1 << len(src)):
        size = sel.bit_count()
        if size < lo_src:
            continue
        xs = [src[i] for i in range(len(src)) if sel >> i & 1]
        contrib = sorted(10 * sum(1 for x in xs if adj[x] & dst_bits[y]) - size for y in dst)
        worst = sum(contrib[:lo_dst]) + sum(c for c in contrib[lo_dst:] if c < 0)
        if worst < 0:
            return False
    return True


def is_k_regular_pair(d: OrientedGraph, w1: Sequence[int], w2: Sequence[int], k: int,
                      caps: Caps = DEFAULT_CAPS) -> bool:
    """Both directions carry at least a tenth of |X1||X2| arcs for all X_i ⊆ W_i with |X_i| >= |W_i|/20.

    Subsets of the smaller side are enumerated; for each, the worst subset of
    the other side is found exactly by taking its most negative contributions.
    """
    _check_pair(d, w1, w2, k)
    if len(w1) + len(w2) > caps.regular_pair_vertices:
        raise ResourceLimitError("regular_pair_vertices", caps.regular_pair_vertices, len(w1) + len(w2))
    small, big = (list(w1), list(w2)) if len(w1) <= len(w2) else (list(w2), list(w1))
    return _one_direction_ok(d, small, big, True) and _one_direction_ok(d, small, big, False)


def is_k_regular_pair_oracle(d: OrientedGraph, w1: Sequence[int], w2: Sequence[int], k: int) -> bool:
    """Literal double loop over subset pairs; exponential in |W1| + |W2|."""
    _check_pair(d, w1, w2, k)
    w1, w2 = list(w1), list(w2)
    for s1 in range(1, 1 << len(w1)):
        x1 = [w1[i] for i in range(len(w1)) if s1 >> i & 1]
        if 20 * len(x1) < len(w1):
            continue
        for s2 in range(1, 1 << len(w2)):
            x2 = [w2[i] for i in range(len(w2)) if s2 >> i & 1]
            if 20 * len(x2) < len(w2):
                continue
            fwd = sum(1 for u in x1 for v in x2 if d.has_arc(u, v))
            bwd = sum(1 for u in x1 for v in x2 if d.has_arc(v, u))
            if 10 * fwd < len(x1) * len(x2) or 10 * bwd < len(x1) * len(x2):
                return False
    return True


def greedy_path_in_dense_pair(d: OrientedGraph, w1: Sequence[int], w2: Sequence[int], k: int) -> list[int] | None:
    """Alternating directed path W1 -> W2 -> ... -> W1 with ``2k`` arcs, or None.

    Keeps, for the current endpoint, a set of at least |W|/20 unused
    out-neighbours on the opposite side and extends through the member of
    that set with the most unused out-neighbours back across (ties to the
    smallest index).
    """
    _check_pair(d, w1, w2, k)
    sides = (list(w1), list(w2))
    masks = [sum(1 << v for v in side) for side in sides]
    need = [math.ceil(len(side) / 20) for side in sides]
    used = 0

    def onward(v: int, side: int) -> int:
        return d.out_adj[v] & masks[side] & ~used

    def pick(pool: Iterable[int], side: int) -> int | None:
        best, best_size = None, -1
        for v in sorted(pool):
            size = onward(v, side).bit_count()
            if size >= need[side] and size > best_size:
                best, best_size = v, size
        return best

    first = pick(sides[0], 1)
    if first is None:
        return None
    path = [first]
    used |= 1 << first
    for step in range(1, 2 * k + 1):
        here = step % 2  # side of the vertex being chosen
        pool = [v for v in sides[here] if onward(path[-1], here) >> v & 1]
        if step == 2 * k:
            nxt = min(pool) if pool else None
        else:
            nxt = pick(pool, 1 - here)
        if nxt is None:
            return None
        path.append(nxt)
        used |= 1 << nxt
    return path


def is_alternating_path(d: OrientedGraph, w1: Sequence[int], w2: Sequence[int], k: int, path: Sequence[int]) -> bool:
    s1, s2 = set(w1), set(w2)
    if len(path) != 2 * k + 1 or len(set(path)) != len(path):
        return False
    for i, v in enumerate(path):
        if v not in (s1 if i % 2 == 0 else s2):
            return False
    return all(d.has_arc(path[i], path[i + 1]) for i in range(len(path) - 1))


def erdos_gallai_check(n: int, k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """ex(n, path with k edges) <= (k-1)n/2, with equality when k divides n."""
    value = ex(n, path_graph(k + 1), caps).value
    if n % k == 0:
        return 2 * value == (k - 1) * n
    return 2 * value <= (k - 1) * n
