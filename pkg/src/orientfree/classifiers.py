"""Structural predicates behind the forest growth dichotomy.

``is_antidirected`` and ``is_one_almost_antidirected`` search, per connected
component of the underlying graph, the two proper 2-colourings (the
component's smallest vertex in A, then in B) and combine components
independently. Isolated vertices go to A.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidArgumentError
from .graphs import OrientedGraph, UndirectedGraph, underlying


@dataclass(frozen=True)
class Bipartition:
    class_a: frozenset[int]
    class_b: frozenset[int]

    def to_json(self) -> dict[str, list[int]]:
        return {"A": sorted(self.class_a), "B": sorted(self.class_b)}


class Growth(str, enum.Enum):
    THETA_N = "n"
    THETA_N_LOG_N = "nlogn"


def is_forest(g: UndirectedGraph) -> bool:
    return g.m == g.n - len(g.components())


def _two_colouring(g: UndirectedGraph, comp: list[int]) -> dict[int, int] | None:
    colour = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in colour:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                return None
    return colour


def _find_bipartition(h: OrientedGraph, max_in_a: int, max_out_b: int) -> Bipartition | None:
    g = underlying(h)
    a: set[int] = set()
    b: set[int] = set()
    for comp in g.components():
        if len(comp) == 1:
            a.add(comp[0])
            continue
        colour = _two_colouring(g, comp)
        if colour is None:
            return None
        for flip in (0, 1):
            side_a = [v for v in comp if colour[v] ^ flip == 0]
            side_b = [v for v in comp if colour[v] ^ flip == 1]
            if all(h.in_degree(v) <= max_in_a for v in side_a) and all(
                h.out_degree(v) <= max_out_b for v in side_b
            ):
                a.update(side_a)
                b.update(side_b)
                break
        else:
            return None
    return Bipartition(frozenset(a), frozenset(b))


def is_antidirected(h: OrientedGraph) -> Bipartition | None:
    return _find_bipartition(h, 0, 0)


def is_one_almost_antidirected(h: OrientedGraph) -> Bipartition | None:
    return _find_bipartition(h, 1, 1)


def check_bipartition(h: OrientedGraph, bp: Bipartition, max_in_a: int, max_out_b: int) -> bool:
    """Re-check a witness directly against the defining conditions."""
    if bp.class_a & bp.class_b or bp.class_a | bp.class_b != frozenset(range(h.n)):
        return False
    for u, v in h.arcs:
        if (u in bp.class_a) == (v in bp.class_a):
            return False
    in_ok = all(sum(1 for _, v in h.arcs if v == u) <= max_in_a for u in bp.class_a)
    out_ok = all(sum(1 for u, _ in h.arcs if u == v) <= max_out_b for v in bp.class_b)
    return in_ok and out_ok


def predicted_growth(h: OrientedGraph) -> Growth:
    """Growth class of log D(n, H) for an oriented forest with at least two edges."""
    f = underlying(h)
    if not is_forest(f):
        raise InvalidArgumentError("underlying graph is not a forest")
    if f.m < 2:
        raise InvalidArgumentError(f"pattern must have at least two edges (has {f.m})")
    if is_one_almost_antidirected(h) is not None:
        return Growth.THETA_N
    return Growth.THETA_N_LOG_N


def classify(h: OrientedGraph) -> dict:
    """Summary used by the ``classify`` command."""
    f = underlying(h)
    forest = is_forest(f)
    anti = is_antidirected(h)
    almost = is_one_almost_antidirected(h)
    growth = None
    if forest and f.m >= 2:
        growth = predicted_growth(h).value
    return {
        "forest": forest,
        "antidirected": anti.to_json() if anti is not None else False,
        "one_almost_antidirected": almost.to_json() if almost is not None else False,
        "growth": growth,
    }
