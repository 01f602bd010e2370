"""Set-family view of H-free orientations and the shattering inequality chain.

An orientation is identified with the edge set on which it differs from a
reference orientation ``Q``. The family of H-free orientations then has at
most as many members as it has shattered sets (Sauer-Shelah), and every
shattered edge set is F-free for F the underlying graph of H, which bounds
the count by N(G, F).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable

from .enumeration import DEFAULT_CAPS, Caps, count_f_free_subgraphs, h_free_orientation_masks
from .errors import InvalidArgumentError, ResourceLimitError
from .graphs import OrientedGraph, Orientation, UndirectedGraph, underlying
from .subgraph import contains_undirected


@dataclass(frozen=True)
class SetFamily:
    """Subsets of ``range(ground)`` stored as int bit masks."""

    ground: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        limit = 1 << self.ground
        if any(not 0 <= m < limit for m in self.members):
            raise InvalidArgumentError("member outside the ground set")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def is_downward_closed(self) -> bool:
        return all(m & ~(1 << i) in self.members for m in self.members for i in range(self.ground) if m >> i & 1)


def orientation_family(g: UndirectedGraph, h: OrientedGraph, q: Orientation | None = None) -> SetFamily:
    """Flip sets A with Q flipped on A being H-free. Default Q is all edges low -> high."""
    if q is None:
        q = Orientation.from_mask(g, 0)
    elif q.host != g:
        raise InvalidArgumentError("reference orientation belongs to a different host graph")
    base = q.mask
    return SetFamily(g.m, frozenset(mask ^ base for mask in h_free_orientation_masks(g, h)))


def _shattered(members: Iterable[int], s: int) -> bool:
    need = 1 << s.bit_count()
    seen = set()
    for a in members:
        seen.add(a & s)
        if len(seen) == need:
            return True
    return False


def shattered_sets(fam: SetFamily, caps: Caps = DEFAULT_CAPS) -> SetFamily:
    """str(fam), built level by level: a set can only be shattered if all
    its one-smaller subsets are, so candidates at size j+1 are unions of
    shattered size-j sets with one extra element."""
    if fam.ground > caps.shatter_ground:
        raise ResourceLimitError("shatter_ground", caps.shatter_ground, fam.ground)
    if not fam.members:
        return SetFamily(fam.ground, frozenset())
    members = sorted(fam.members)
    found = {0}
    level = {0}
    while level:
        cands = set()
        for s in level:
            for i in range(fam.ground):
                if s >> i & 1:
                    continue
                t = s | 1 << i
                if t in cands:
                    continue
                if all(t & ~(1 << j) in found for j in range(fam.ground) if t >> j & 1):
                    cands.add(t)
        level = {t for t in cands if _shattered(members, t)}
        found |= level
    return SetFamily(fam.ground, frozenset(found))


def shattered_sets_oracle(fam: SetFamily) -> SetFamily:
    """Every subset of the ground set tested against the definition."""
    members = list(fam.members)
    return SetFamily(fam.ground, frozenset(s for s in range(1 << fam.ground) if _shattered(members, s)))


@dataclass(frozen=True)
class KozmaMoranReport:
    d: int
    str_count: int
    n: int
    sauer_shelah_holds: bool
    shattered_all_f_free: bool
    d_le_n: bool
    downward_closed: bool

    @property
    def ok(self) -> bool:
        return self.sauer_shelah_holds and self.shattered_all_f_free and self.d_le_n and self.downward_closed

    def to_json(self) -> dict[str, Any]:
        return {
            "d": str(self.d),
            "str": str(self.str_count),
            "n": str(self.n),
            "sauer_shelah_holds": self.sauer_shelah_holds,
            "shattered_all_F_free": self.shattered_all_f_free,
            "d_le_n": self.d_le_n,
            "downward_closed": self.downward_closed,
        }


def verify_kozma_moran(g: UndirectedGraph, h: OrientedGraph, q: Orientation | None = None,
                       caps: Caps = DEFAULT_CAPS) -> KozmaMoranReport:
    if g.m > caps.shatter_ground:
        raise ResourceLimitError("shatter_ground", caps.shatter_ground, g.m)
    fam = orientation_family(g, h, q)
    shattered = shattered_sets(fam, caps)
    f = underlying(h)
    f_free = all(contains_undirected(g.edge_subgraph(s), f) is None for s in shattered.members)
    n = count_f_free_subgraphs(g, f).value
    return KozmaMoranReport(
        d=len(fam),
        str_count=len(shattered),
        n=n,
        sauer_shelah_holds=len(fam) <= len(shattered),
        shattered_all_f_free=f_free,
        d_le_n=len(fam) <= n,
        downward_closed=shattered.is_downward_closed(),
    )


def random_family(rng: random.Random, ground: int) -> SetFamily:
    size = rng.randint(0, min(1 << ground, 64))
    return SetFamily(ground, frozenset(rng.sample(range(1 << ground), size)))


def sauer_shelah_sweep(seed: int, count: int = 1000, max_ground: int = 12) -> int:
    """Number of seeded random families violating |A| <= |str(A)| (expected 0)."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        fam = random_family(rng, rng.randint(0, max_ground))
        if len(fam) > len(shattered_sets(fam)):
            bad += 1
    return bad
