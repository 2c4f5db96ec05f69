import random

import pytest

import pmctw


def cycle(n):
    return pmctw.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen():
    edges = []
    for i in range(5):
        edges += [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]
    return pmctw.Graph(10, edges)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return pmctw.Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_exact_treewidth_with_witness():
    sol = pmctw.treewidth(petersen())
    assert sol["width"] == 4
    assert pmctw.check_decomposition(petersen(), sol["bags"], sol["tree_edges"]) is None


def test_decision_and_polyspace():
    c5 = cycle(5)
    assert pmctw.treewidth_at_most(c5, 1) is None
    assert pmctw.treewidth_at_most(c5, 2)["width"] == 2
    res = pmctw.treewidth_polyspace(c5)
    assert res["width"] == 2
    assert res["stats"]["max_recursion_depth"] <= 5


def test_families_match_oracle():
    for seed in range(10):
        g = random_graph(9, 0.35, seed)
        assert pmctw.minimal_separators(g) == pmctw.oracle.minimal_separators(g)
        assert pmctw.pmcs(g) == pmctw.oracle.pmcs(g)
        assert pmctw.pmcs(g, nice_only=True) == pmctw.oracle.nice_pmcs(g)
        assert pmctw.treewidth(g)["width"] == pmctw.oracle.treewidth(g)


def test_connected_sets():
    path = pmctw.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    recs = pmctw.connected_sets(path, root=2, b=1, f=2)
    assert sorted(s for s, _ in recs) == [[1, 2], [2, 3]]
    assert pmctw.oracle.connected_sets(path, 2, 1, 2) == [[1, 2], [2, 3]]
    assert pmctw.count_bound(3, 2) == "10"


def test_parse_and_errors():
    g = pmctw.parse_graph("p tw 5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    assert (g.n, g.m) == (5, 5)
    assert pmctw.parse_graph(pmctw.write_graph(g)).edges() == g.edges()
    with pytest.raises(ValueError):
        pmctw.parse_graph("p tw 2 1\n1 1\n")
    with pytest.raises(ValueError):
        pmctw.Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        pmctw.oracle.minimal_separators(pmctw.Graph(20))
    with pytest.raises(ValueError):
        pmctw.treewidth_polyspace(cycle(5), alpha=0.7)
