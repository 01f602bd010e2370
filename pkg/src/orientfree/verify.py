"""The ``verify-all`` invariant suite.

Each check returns ``(passed, detail)`` where ``detail`` is JSON-ready and
contains no timing, so the report is a pure function of the seed.
"""

from __future__ import annotations

import itertools
import random
import time
from typing import Any, Callable, Iterator

from .canon import connected_graphs
from .classifiers import Growth, check_bipartition, is_one_almost_antidirected, predicted_growth
from .constructions import (
    ImplicitTree,
    UniversalTreeSpec,
    count_universal_tree,
    greedy_embed_forest,
    greedy_embed_tree,
    matching_reversal_family,
    out_star,
    star_freeness_monte_carlo,
    universal_tree,
    universal_tree_minus,
    validate_implicit_embedding,
)
from .enumeration import (
    Method,
    count_h_free_orientations,
    d_n_h,
    enumerate_oriented_forests,
)
from .graphs import (
    OrientedGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    directed_cycle,
    directed_path,
    q_path,
    transitive_tournament,
    turan_edges,
    underlying,
)
from .kozma_moran import sauer_shelah_sweep, verify_kozma_moran
from .pathalgo import (
    erdos_gallai_check,
    greedy_path_in_dense_pair,
    is_alternating_path,
    longest_directed_path,
    path_count_bound_check,
    run_state_algorithm,
    verify_completion_bound,
    verify_path_to_state,
)
from .subgraph import contains_directed
from .textio import emit_graph

DEFAULT_SEED = 42

Detail = dict[str, Any]
Check = Callable[[random.Random], tuple[bool, Detail]]


def pattern_corpus() -> dict[str, OrientedGraph]:
    """Named test patterns shared by the suite and the acceptance tests."""
    return {
        "C3": directed_cycle(3),
        "TT3": transitive_tournament(3),
        "C5": directed_cycle(5),
        "P2": directed_path(2),
        "P3": directed_path(3),
        "P4": directed_path(4),
        "Q": q_path(),
        "S2": out_star(2),
        "S3": out_star(3),
    }


def host_corpus(max_n: int) -> list:
    return [g for n in range(1, max_n + 1) for g in connected_graphs(n)]


def labeled_digraphs(max_n: int) -> Iterator[OrientedGraph]:
    """Every oriented graph on ``range(n)`` for ``n <= max_n``; each pair is absent, forward or backward."""
    for n in range(max_n + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
            yield OrientedGraph.from_arcs(n, [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c])


def _oracle_equivalence(rng: random.Random) -> tuple[bool, Detail]:
    mismatches = 0
    pairs = 0
    for g in host_corpus(5):
        for h in pattern_corpus().values():
            pairs += 1
            fast = count_h_free_orientations(g, h).value
            slow = count_h_free_orientations(g, h, Method.ORACLE).value
            mismatches += fast != slow
    return mismatches == 0, {"pairs": pairs, "mismatches": mismatches}


def _kozma_moran_chain(rng: random.Random) -> tuple[bool, Detail]:
    violations = 0
    pairs = 0
    names = ("C3", "TT3", "P2", "P3", "Q")
    corpus = pattern_corpus()
    for g in host_corpus(5):
        for name in names:
            pairs += 1
            violations += not verify_kozma_moran(g, corpus[name]).ok
    return violations == 0, {"pairs": pairs, "violations": violations}


def _exact_values(rng: random.Random) -> tuple[bool, Detail]:
    got = {
        "D(3,C3)": d_n_h(3, directed_cycle(3)).value,
        "D(4,C3)": d_n_h(4, directed_cycle(3)).value,
    }
    want = {"D(3,C3)": 6, "D(4,C3)": 24}
    for n in (3, 4, 5):
        got[f"D({n},TT3)"] = d_n_h(n, transitive_tournament(3)).value
        want[f"D({n},TT3)"] = 1 << turan_edges(n, 2)
    return got == want, {k: str(v) for k, v in got.items()}


def _path_bounds(rng: random.Random) -> tuple[bool, Detail]:
    ok = all(path_count_bound_check(n, k) for n in range(2, 6) for k in (2, 3))
    eg = all(erdos_gallai_check(n, k) for n in range(2, 7) for k in (2, 3))
    return ok and eg, {"upper_bound": ok, "erdos_gallai": eg}


def _state_invariants(rng: random.Random) -> tuple[bool, Detail]:
    runs = failures = 0
    for d in labeled_digraphs(5):
        trace = run_state_algorithm(d)
        runs += 1
        good = verify_path_to_state(d, trace)
        longest = longest_directed_path(d)
        for k in (2, 3):
            if longest < k and any(s.a > k or s.b > k for s in trace.states):
                good = False
        failures += not good
    hosts = (complete_graph(3), cycle_graph(4), complete_graph(4), complete_bipartite(2, 3))
    completion = all(verify_completion_bound(g, 2) for g in hosts)
    return failures == 0 and completion, {"runs": runs, "failures": failures, "completion_bound": completion}


def _classifier_dichotomy(rng: random.Random) -> tuple[bool, Detail]:
    mismatches = 0
    forests = 0
    for k in range(1, 5):
        family = list(matching_reversal_family(2 * k))
        for h in enumerate_oriented_forests(k):
            if underlying(h).m < 2:
                continue
            forests += 1
            bp = is_one_almost_antidirected(h)
            growth = predicted_growth(h)
            if (bp is not None) != (growth is Growth.THETA_N):
                mismatches += 1
            if bp is not None and not check_bipartition(h, bp, 1, 1):
                mismatches += 1
            if bp is None and any(contains_directed(m, h) is not None for m in family):
                mismatches += 1
    named = predicted_growth(directed_path(4)) is Growth.THETA_N and predicted_growth(q_path()) is Growth.THETA_N_LOG_N
    return mismatches == 0 and named, {"forests": forests, "mismatches": mismatches, "named_examples": named}


def _constructions(rng: random.Random) -> tuple[bool, Detail]:
    sizes = {}
    for n in (4, 6, 8):
        members = {m.arcs for m in matching_reversal_family(n)}
        sizes[str(n)] = len(members)
    family_ok = sizes == {"4": 2, "6": 6, "8": 24}
    counts = {}
    trees_ok = True
    for s, t in ((1, 1), (1, 2), (2, 1), (2, 2)):
        spec = UniversalTreeSpec(s, t)
        v, _, _ = count_universal_tree(spec)
        trees_ok &= universal_tree(spec).n == v
        counts[f"H_{s},{t}"] = v
    counts["H-_1,2"] = universal_tree_minus(2).n
    trees_ok &= counts["H-_1,2"] == 9 and counts["H_1,2"] == 12
    embeds = 0
    embeds_ok = True
    big = ImplicitTree(5, 5)
    for k in range(1, 6):
        for h in enumerate_oriented_forests(k):
            if not underlying(h).is_connected() or is_one_almost_antidirected(h) is None:
                continue
            embeds += 1
            embeds_ok &= validate_implicit_embedding(big, h, greedy_embed_tree(h, 5))
    forest = OrientedGraph.from_arcs(4, [(0, 1), (2, 3)])
    embeds_ok &= validate_implicit_embedding(ImplicitTree(3, 2), forest, greedy_embed_forest(forest, 2))
    return family_ok and trees_ok and embeds_ok, {
        "family_sizes": sizes,
        "tree_counts": counts,
        "embeddings": embeds,
        "embeddings_ok": embeds_ok,
    }


def _sauer_shelah(rng: random.Random) -> tuple[bool, Detail]:
    bad = sauer_shelah_sweep(rng.getrandbits(32), count=200)
    return bad == 0, {"families": 200, "violations": bad}


def _dense_pair(rng: random.Random) -> tuple[bool, Detail]:
    w1, w2 = list(range(8)), list(range(8, 16))
    arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u in w1 for v in w2]
    d = OrientedGraph.from_arcs(16, arcs)
    path = greedy_path_in_dense_pair(d, w1, w2, 2)
    ok = path is not None and is_alternating_path(d, w1, w2, 2, path)
    return ok, {"path": path}


def _out_star(rng: random.Random) -> tuple[bool, Detail]:
    k, eps = 100, 0.4
    est = star_freeness_monte_carlo(k, 2 * k, eps, 200, seed=rng.getrandbits(32))
    ok = est.probability >= 0.5 and est.log2_lower_bound is not None and est.log2_lower_bound >= est.target_exponent
    return ok, {
        "k": k,
        "epsilon": eps,
        "estimate": f"{est.probability:.4f}",
        "base_degree": est.base_degree,
    }


def _odd_cycle(rng: random.Random) -> tuple[bool, Detail]:
    rep = d_n_h(5, directed_cycle(5))
    floor = 1 << (25 // 4)
    return rep.value >= floor, {
        "D(5,C5)": str(rep.value),
        "turan_floor": str(floor),
        "exceeds": rep.value > floor,
        "witness": emit_graph(rep.witness),
    }


CHECKS: list[tuple[str, Check]] = [
    ("oracle_equivalence", _oracle_equivalence),
    ("kozma_moran_chain", _kozma_moran_chain),
    ("exact_values", _exact_values),
    ("path_bounds", _path_bounds),
    ("state_invariants", _state_invariants),
    ("classifier_dichotomy", _classifier_dichotomy),
    ("constructions", _constructions),
    ("sauer_shelah", _sauer_shelah),
    ("dense_pair_path", _dense_pair),
    ("out_star_monte_carlo", _out_star),
    ("odd_cycle", _odd_cycle),
]


def run_suite(seed: int = DEFAULT_SEED, meta: bool = True) -> dict[str, Any]:
    """Run every check with its own RNG derived from ``seed`` and the check name."""
    results = []
    for name, check in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        passed, detail = check(rng)
        entry: dict[str, Any] = {"name": name, "passed": bool(passed), "detail": detail}
        if meta:
            entry["elapsed_ms"] = int(round((time.perf_counter() - t0) * 1000))
        results.append(entry)
    return {"seed": seed, "passed": all(r["passed"] for r in results), "checks": results}
