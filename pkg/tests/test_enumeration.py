from __future__ import annotations

from itertools import product

import networkx as nx
import pytest

from conftest import perm_key
from mostar.canon import canonical_form
from mostar.enumeration import (
    BicyclicClass,
    bicyclic_graphs,
    brute_force_oracle,
    classify_bicyclic,
    enumerate_bicyclic,
    enumerate_kind,
    enumerate_trees,
    enumerate_unicyclic,
    tree_centers,
    tree_code,
    unicyclic_graphs,
)
from mostar.families import cycle, make_b_family, make_theta, path, star
from mostar.graph import Graph, GraphError, add_pendants, is_connected, join_at

# Populations of the OEIS sequences A000055 (trees), A001429 (connected
# unicyclic) and A001435 (connected bicyclic); the small ones are recomputed
# below by independent oracles.
TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551}
UNICYCLIC = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657, 11: 1806}
BICYCLIC = {5: 1, 6: 5, 7: 19, 8: 67, 9: 236, 10: 797, 11: 2678}


def prufer_tree(n: int, seq) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    return edges + [(u, v)]


@pytest.mark.parametrize("n", range(3, 7))
def test_trees_match_labeled_tree_oracle(n):
    oracle = {perm_key(n, prufer_tree(n, seq)) for seq in product(range(n), repeat=n - 2)}
    ours = {perm_key(n, t.edges) for t in enumerate_trees(n)}
    assert ours == oracle
    assert len(ours) == TREES[n]


def test_tree_examples():
    assert [t.m for t in enumerate_trees(1)] == [0]
    four = list(enumerate_trees(4))
    assert {canonical_form(t) for t in four} == {canonical_form(path(4)), canonical_form(star(4))}
    assert len(list(enumerate_trees(7))) == 11


@pytest.mark.parametrize("n", range(1, 13))
def test_trees_match_networkx(n):
    ours = list(enumerate_trees(n))
    assert len(ours) == TREES[n]
    theirs = [nx.Graph(t) for t in nx.nonisomorphic_trees(n)] if n > 1 else [nx.empty_graph(1)]
    assert len(theirs) == len(ours)
    remaining = list(theirs)
    for t in ours:
        h = nx.Graph(list(t.edges))
        h.add_nodes_from(range(t.n))
        hit = next(i for i, x in enumerate(remaining) if nx.is_isomorphic(x, h))
        remaining.pop(hit)


def test_tree_code_is_invariant():
    t = join_at(path(5), 2, star(4), 0)
    perm = [6, 2, 0, 5, 1, 7, 3, 4]
    assert tree_code(t) == tree_code(t.relabel(perm))
    assert tree_code(path(4)) != tree_code(star(4))
    assert sorted(tree_centers(path(6))) == [2, 3]
    assert tree_centers(path(5)) == [2]


@pytest.mark.parametrize("m", range(3, 8))
def test_unicyclic_match_oracle(m):
    assert list(unicyclic_graphs(m)) == list(brute_force_oracle(m, m))
    assert len(unicyclic_graphs(m)) == UNICYCLIC[m]


@pytest.mark.parametrize("m", range(5, 8))
def test_bicyclic_match_oracle(m):
    assert list(bicyclic_graphs(m)) == list(brute_force_oracle(m - 1, m))
    assert len(bicyclic_graphs(m)) == BICYCLIC[m]


def test_population_examples():
    assert list(enumerate_unicyclic(3)) == [cycle(3)]
    assert len(list(enumerate_unicyclic(5))) == 5
    assert len(list(enumerate_unicyclic(7))) == 33
    five = list(enumerate_bicyclic(5))
    # K4 minus an edge is the only connected graph with 4 vertices and 5 edges
    assert [canonical_form(g) for g in five] == [canonical_form(make_theta(1, 2, 2))]
    assert list(enumerate_bicyclic(4)) == []


@pytest.mark.parametrize("m", range(8, 12))
def test_larger_populations(m):
    assert len(unicyclic_graphs(m)) == UNICYCLIC[m]
    assert len(bicyclic_graphs(m)) == BICYCLIC[m]


@pytest.mark.parametrize("m", range(5, 11))
def test_bicyclic_outputs_are_valid_and_canonical(m):
    graphs = bicyclic_graphs(m)
    keys = [canonical_form(g) for g in graphs]
    assert keys == sorted(set(keys))
    for g in graphs:
        assert g.n == m - 1 and g.m == m and is_connected(g)
        assert canonical_form(g).graph() == g


def test_enumeration_is_deterministic_across_jobs():
    from mostar.enumeration import _augment_all

    parents = unicyclic_graphs(8)
    assert _augment_all(parents, jobs=1) == _augment_all(parents, jobs=2)


def test_enumerate_kind():
    assert list(enumerate_kind("tree", 4)) == list(enumerate_trees(4))
    assert list(enumerate_kind("bicyclic", 6)) == list(bicyclic_graphs(6))
    with pytest.raises(GraphError):
        list(enumerate_kind("tricyclic", 6))
    with pytest.raises(GraphError):
        unicyclic_graphs(2)


def test_oracle_examples():
    assert list(brute_force_oracle(3, 3)) == [cycle(3)]
    assert list(brute_force_oracle(4, 5)) == list(enumerate_bicyclic(5))
    assert list(brute_force_oracle(5, 5)) == list(enumerate_unicyclic(5))
    assert list(brute_force_oracle(3, 1)) == []
    assert list(brute_force_oracle(1, 0)) == [Graph(1)]
    with pytest.raises(GraphError):
        brute_force_oracle(8, 7)


@pytest.mark.parametrize("g, expected", [
    (make_b_family("B", 10), BicyclicClass("G1", cycles=(4, 4), bridge=0)),
    (make_b_family("B1", 8), BicyclicClass("G1", cycles=(3, 4), bridge=0)),
    (make_b_family("B5", 9), BicyclicClass("G2", brace=(2, 2, 2))),
    (make_b_family("B6", 7), BicyclicClass("G2", brace=(1, 2, 3))),
    (make_theta(3, 4, 5), BicyclicClass("G2", brace=(3, 4, 5))),
])
def test_classify_examples(g, expected):
    assert classify_bicyclic(g) == expected


def test_classify_dumbbell():
    # triangle and 5-cycle joined by a path of length 2, with pendant noise
    tri = cycle(3)
    g = join_at(tri, 0, path(3), 0)
    g = join_at(g, g.n - 1, cycle(5), 0)
    g = add_pendants(g, 4, 2)
    cls = classify_bicyclic(g.relabel(list(reversed(range(g.n)))))
    assert cls == BicyclicClass("G1", cycles=(3, 5), bridge=2)


def test_classify_rejects():
    with pytest.raises(GraphError):
        classify_bicyclic(cycle(5))


@pytest.mark.parametrize("m", range(5, 11))
def test_every_bicyclic_graph_classifies(m):
    for g in bicyclic_graphs(m):
        cls = classify_bicyclic(g)
        if cls.kind == "G2":
            a, b, c = cls.brace
            assert 1 <= a <= b <= c and b >= 2 and a + b + c <= m
        else:
            lo, hi = cls.cycles
            assert 3 <= lo <= hi and lo + hi + cls.bridge <= m
