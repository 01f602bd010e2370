import pytest

from orientfree.classifiers import is_forest, is_one_almost_antidirected
from orientfree.constructions import (
    ImplicitTree,
    UniversalTreeSpec,
    count_universal_tree,
    greedy_embed_forest,
    greedy_embed_tree,
    matching_reversal_family,
    near_regular_base,
    out_star,
    star_freeness_monte_carlo,
    universal_tree,
    universal_tree_minus,
    validate_implicit_embedding,
)
from orientfree.enumeration import enumerate_oriented_forests
from orientfree.errors import InvalidArgumentError, ResourceLimitError
from orientfree.graphs import OrientedGraph, directed_path, q_path, underlying
from orientfree.subgraph import contains_directed, is_directed_embedding


def leaves(d: OrientedGraph) -> tuple[int, int]:
    """(out-leaves, in-leaves) among non-root vertices; an out-leaf's only arc leaves it."""
    outs = sum(1 for v in range(1, d.n) if d.out_degree(v) == 1 and d.in_degree(v) == 0)
    ins = sum(1 for v in range(1, d.n) if d.in_degree(v) == 1 and d.out_degree(v) == 0)
    return outs, ins


@pytest.mark.parametrize("n,size", [(2, 1), (4, 2), (6, 6), (8, 24)])
def test_matching_family_sizes(n, size):
    members = list(matching_reversal_family(n))
    assert len(members) == size
    assert len({m.arcs for m in members}) == size
    h = n // 2
    for m in members:
        assert m.m == h * h
        assert all(m.in_degree(i) == 1 for i in range(h))
        assert all(m.out_degree(j) == 1 for j in range(h, n))


@pytest.mark.parametrize("n", [0, 3, 7])
def test_matching_family_rejects_odd(n):
    with pytest.raises(InvalidArgumentError):
        list(matching_reversal_family(n))


def test_matching_family_excludes_rejected_forests():
    family = list(matching_reversal_family(8))
    for h in enumerate_oriented_forests(4):
        if is_one_almost_antidirected(h) is None:
            assert all(contains_directed(m, h) is None for m in family)


def test_small_tree_counts():
    assert count_universal_tree(UniversalTreeSpec(1, 2)) == (12, 6, 2)
    assert count_universal_tree(UniversalTreeSpec(1, 1)) == (6, 2, 1)
    h12 = universal_tree(UniversalTreeSpec(1, 2))
    assert h12.n == 12 and leaves(h12) == (6, 2)
    minus = universal_tree_minus(2)
    assert minus.n == 9 and leaves(minus) == (4, 2)
    assert universal_tree_minus(1).n == 4


def test_h22_by_leaf_identification():
    # each leaf of H_{1,2} becomes the root of its attached copy: 12 + 6*11 + 2*8
    spec = UniversalTreeSpec(2, 2)
    v, outs, ins = count_universal_tree(spec)
    tree = universal_tree(spec)
    assert v == tree.n == 94
    assert (outs, ins) == leaves(tree)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_minus_tree_leaf_counts(t):
    d = universal_tree_minus(t)
    assert d.n == (t + 1) ** 2
    assert leaves(d) == (t * t, t)
    assert is_forest(underlying(d)) and underlying(d).is_connected()


def test_counts_match_materialization():
    checked = 0
    for s in range(1, 5):
        for t in range(1, 6):
            for tprime in (None, t + 1):
                spec = UniversalTreeSpec(s, t, tprime)
                v, outs, ins = count_universal_tree(spec)
                if v > 10**4:
                    continue
                d = universal_tree(spec)
                assert (d.n, *leaves(d)) == (v, outs, ins), spec
                checked += 1
    assert checked >= 10


@pytest.mark.parametrize("s,t", [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1)])
def test_universal_tree_shape(s, t):
    d = universal_tree(UniversalTreeSpec(s, t))
    f = underlying(d)
    assert f.is_connected() and f.m == f.n - 1
    assert is_one_almost_antidirected(d) is not None


def test_implicit_tree_agrees_with_materialized():
    tree = ImplicitTree(2, 2)
    d = tree.materialize()
    assert tree.counts()[0] == d.n
    for i in range(d.n):
        assert tree.index(tree.path_of(i)) == i
    for u in range(d.n):
        for v in range(d.n):
            assert tree.has_arc(tree.path_of(u), tree.path_of(v)) == d.has_arc(u, v)


def test_materialization_cap():
    with pytest.raises(ResourceLimitError) as err:
        universal_tree(UniversalTreeSpec(5, 5))
    assert str(count_universal_tree(UniversalTreeSpec(5, 5))[0]) in str(err.value)


def test_starred_contained_in_wider():
    starred = universal_tree(UniversalTreeSpec(1, 1, 2))
    wide = universal_tree(UniversalTreeSpec(1, 2))
    assert starred.n == 8
    assert contains_directed(wide, starred) is not None


def test_spec_invariants():
    with pytest.raises(InvalidArgumentError):
        UniversalTreeSpec(0, 1)
    with pytest.raises(InvalidArgumentError):
        UniversalTreeSpec(1, 0)
    with pytest.raises(InvalidArgumentError):
        UniversalTreeSpec(1, 1, 0)


def test_greedy_tree_examples():
    arc = directed_path(1)
    emb = greedy_embed_tree(arc, 2)
    assert validate_implicit_embedding(ImplicitTree(2, 2), arc, emb)
    p4 = directed_path(4)
    emb = greedy_embed_tree(p4, 5)
    assert validate_implicit_embedding(ImplicitTree(5, 5), p4, emb)
    with pytest.raises(InvalidArgumentError, match="1-almost"):
        greedy_embed_tree(q_path(), 10)
    with pytest.raises(InvalidArgumentError, match="more than k"):
        greedy_embed_tree(p4, 3)


def test_greedy_tree_matches_materialized_host():
    host = universal_tree(UniversalTreeSpec(3, 3))
    for h in enumerate_oriented_forests(3):
        if underlying(h).is_connected() and is_one_almost_antidirected(h) is not None:
            assert is_directed_embedding(host, h, greedy_embed_tree(h, 3))


@pytest.mark.parametrize("k", range(1, 6))
def test_greedy_tree_all_small(k):
    tree = ImplicitTree(k, k)
    for h in enumerate_oriented_forests(k):
        if underlying(h).is_connected() and is_one_almost_antidirected(h) is not None:
            assert validate_implicit_embedding(tree, h, greedy_embed_tree(h, k))


def test_greedy_forest():
    two_arcs = OrientedGraph.from_arcs(4, [(0, 1), (2, 3)])
    emb = greedy_embed_forest(two_arcs, 2)
    assert validate_implicit_embedding(ImplicitTree(3, 2), two_arcs, emb)
    assert greedy_embed_forest(OrientedGraph.from_arcs(0, []), 2).mapping == ()
    host = ImplicitTree(4, 3)
    for h in enumerate_oriented_forests(3):
        if is_one_almost_antidirected(h) is not None:
            assert validate_implicit_embedding(host, h, greedy_embed_forest(h, 3))


def test_greedy_forest_connected_input_lands_in_one_copy():
    tree = directed_path(2)
    emb = greedy_embed_forest(tree, 3)
    assert validate_implicit_embedding(ImplicitTree(4, 3), tree, emb)
    paths = [ImplicitTree(4, 3).path_of(x) for x in emb.mapping]
    assert len({p[:2] for p in paths}) == 1


def test_validator_rejects_bad_embeddings():
    from orientfree.subgraph import Embedding

    tree = ImplicitTree(2, 2)
    arc = directed_path(1)
    assert not validate_implicit_embedding(tree, arc, Embedding((0, 0)))
    assert not validate_implicit_embedding(tree, arc, Embedding((0, 10**6)))
    good = greedy_embed_tree(arc, 2)
    assert not validate_implicit_embedding(tree, arc, Embedding(good.mapping[::-1]))


def test_out_star():
    assert out_star(1).arcs == ((0, 1),)
    s3 = out_star(3)
    assert max(s3.out_degree(v) for v in range(4)) == 3
    f = underlying(s3)
    assert f.degree(0) == 3 and f.m == 3
    with pytest.raises(InvalidArgumentError):
        out_star(0)


def test_near_regular_base():
    base = near_regular_base(10, 0.2)
    assert base.n == 20
    assert {base.degree(v) for v in range(20)} == {18}
    assert {near_regular_base(5, 1.0).degree(v) for v in range(10)} == {5}


def test_monte_carlo():
    est = star_freeness_monte_carlo(100, 200, 0.4, 100, seed=7)
    assert est.probability >= 0.5
    assert est == star_freeness_monte_carlo(100, 200, 0.4, 100, seed=7)
    loose = star_freeness_monte_carlo(6, 12, 1.0, 50, seed=1)
    assert 0.0 <= loose.probability <= 1.0
    with pytest.raises(InvalidArgumentError):
        star_freeness_monte_carlo(10, 20, 0.2, 0)
    with pytest.raises(InvalidArgumentError):
        star_freeness_monte_carlo(10, 30, 0.2, 10)
