import pytest

from geodex.bits import full_mask
from geodex.convexity import convexity_number_exhaustive, interval_table, is_convex
from geodex.corpus import complete, connected_corpus, empty, forests, path
from geodex.graph import GraphError, complementary_prism, disjoint_union, distances, from_edges
from geodex.oracle import (
    LEMMAS,
    LemmaLedger,
    hub_witness,
    inner_witness,
    lemma_hull_checks,
    forest_prism_predict,
    tree_prism_predict,
)
from geodex.trees import enumerate_free_trees, named_family


def exact(g):
    return convexity_number_exhaustive(distances(complementary_prism(g))).value


def prism_dm(t):
    return distances(complementary_prism(t.graph))


@pytest.mark.parametrize(
    "tree, case, predicted",
    [
        (named_family("path", 6), "diam>=5", 6),
        (named_family("star_of_stars", 3, 2), "diam4-eq", 12),
        (named_family("star", 4), "diam2", 9),
        (named_family("path", 4), "diam3", 5),
        (named_family("spider", 3, 2), "diam4-eq", 8),
        # center degree 2 below a degree-4 arm
        (named_family("caterpillar", 3, [3, 0, 1]), "diam4-lt", 10),
    ],
)
def test_tree_formula_examples(tree, case, predicted):
    v = tree_prism_predict(tree)
    assert (v.case, v.predicted) == (case, predicted)
    assert exact(tree.graph) == predicted


def test_tree_formula_terms():
    v = tree_prism_predict(named_family("star_of_stars", 3, 2))
    assert dict(v.terms) == {"n+Delta(T-c)-1": 12, "2*Delta+1": 7, "n+2e(c)-Delta+1": 8}
    assert v.predicted == max(x for _, x in v.terms)


def test_tree_formula_rejects_small():
    with pytest.raises(GraphError):
        tree_prism_predict(named_family("path", 2))


@pytest.mark.parametrize("n", range(3, 9))
def test_terms_are_lower_bounds(n):
    for t in enumerate_free_trees(n):
        v = tree_prism_predict(t)
        value = exact(t.graph)
        assert v.predicted >= 1
        assert all(value >= x for _, x in v.terms)


@pytest.mark.parametrize(
    "g, want",
    [
        (empty(2), 3),
        (disjoint_union(complete(1), complete(2)), 5),
        (disjoint_union(complete(2), complete(2)), 6),
    ],
)
def test_forest_formula_examples(g, want):
    assert forest_prism_predict(g) == want == exact(g)


def test_forest_formula_rejects_connected():
    with pytest.raises(GraphError):
        forest_prism_predict(path(3))


def test_forest_formula_all_small_forests():
    for g in forests(7):
        assert forest_prism_predict(g) == exact(g)


def test_forest_formula_other_unions():
    graphs = [
        disjoint_union(complete(3), complete(2)),
        disjoint_union(complete(4), from_edges(3, [(0, 1), (1, 2), (2, 0)])),
        disjoint_union(from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), complete(1)),
        disjoint_union(complete(3), complete(3), complete(2)),
    ]
    for g in graphs:
        assert forest_prism_predict(g) == exact(g)


@pytest.mark.parametrize("t, x", [(named_family("star", 3), 0), (named_family("path", 4), 1),
                                  (named_family("path", 6), 2)])
def test_hub_witness_examples(t, x):
    h = hub_witness(t, x)
    assert h.bit_count() == 2 * t.max_degree + 1
    assert is_convex(prism_dm(t), h)


def test_hub_witness_rejects_low_degree():
    with pytest.raises(GraphError):
        hub_witness(named_family("star", 3), 1)


def test_inner_witness_examples():
    t = named_family("double_star", 2, 3)
    h = inner_witness(t, 1)
    assert h.bit_count() == 7 - 4 + 6 + 1 == 10
    assert is_convex(prism_dm(t), h) and h != full_mask(14)

    t = named_family("star_of_stars", 3, 2)
    h = inner_witness(t, 1)
    assert h.bit_count() == 10 - 3 + 4 + 1 == 12
    assert is_convex(prism_dm(t), h)


def test_inner_witness_on_a_star_is_the_whole_prism():
    t = named_family("star", 3)
    h = inner_witness(t, 0)
    assert h.bit_count() == 4 - 3 + 6 + 1 == 8
    assert h == full_mask(8)


def test_inner_witness_rejects():
    with pytest.raises(GraphError):
        inner_witness(named_family("path", 6), 2)
    with pytest.raises(GraphError):
        inner_witness(named_family("path", 5), 0)


def test_witnesses_proper_off_the_star_case():
    for n in range(3, 10):
        for t in enumerate_free_trees(n):
            dm = prism_dm(t)
            full = full_mask(2 * n)
            for x in range(n):
                if t.graph.degree(x) == t.max_degree:
                    h = hub_witness(t, x)
                    assert is_convex(dm, h) and h != full
            if 3 <= t.diam <= 4:
                for w in range(n):
                    if t.graph.degree(w) >= 2:
                        h = inner_witness(t, w)
                        assert is_convex(dm, h) and h != full


def test_hull_check_examples():
    ledger = lemma_hull_checks(named_family("path", 7))
    assert ledger.passed["edge_mirrors_d6"] == 6 and ledger.ok
    ledger = lemma_hull_checks(named_family("path", 6))
    assert ledger.passed["peripheral_mirrors_d5"] == 2 and ledger.ok
    ledger = lemma_hull_checks(named_family("star_of_stars", 3, 2))
    assert ledger.passed["center_mirrors_d4"] == 6 and ledger.ok
    assert ledger.skipped["edge_mirrors_d6"] == 1


def test_hull_checks_all_trees_to_eight():
    ledger = LemmaLedger()
    for n in range(3, 9):
        for t in enumerate_free_trees(n):
            lemma_hull_checks(t, ledger)
    assert ledger.ok, ledger.failures
    for name in LEMMAS:
        assert ledger.passed.get(name, 0) > 0


def test_mirrors_plus_vertex_on_general_graphs():
    """Mirrors plus one G-side vertex hull the prism of any connected graph."""
    for _, g in connected_corpus(9, random_count=30):
        table = interval_table(distances(complementary_prism(g)))
        mirrors = full_mask(g.n) << g.n
        for u in range(g.n):
            assert table.close(mirrors | 1 << u) == table.full


def test_prism_lower_bound_on_corpus():
    for _, g in connected_corpus(9, random_count=40):
        if g.n >= 2 and distances(g).diam != 3:
            assert exact(g) >= g.n


def test_ledger_merge():
    a, b = LemmaLedger(), LemmaLedger()
    a.record("mirrors_plus_vertex", True)
    b.record("mirrors_plus_vertex", False, "x")
    b.skip("edge_mirrors_d6")
    a.merge(b)
    assert a.passed == {"mirrors_plus_vertex": 1} and a.failed == {"mirrors_plus_vertex": 1}
    assert a.skipped == {"edge_mirrors_d6": 1}
    assert not a.ok and a.failures == ["mirrors_plus_vertex: x"]
