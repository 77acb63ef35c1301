from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import connected_graphs, perm_key
from mostar.canon import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    vertex_orbits,
)
from mostar.families import cycle, make_theta, path, star
from mostar.graph import Graph


def all_labeled(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_examples():
    c4a = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    c4b = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(c4a) == canonical_form(c4b)
    assert canonical_form(path(4)) != canonical_form(star(4))
    key = canonical_form(cycle(5))
    assert isinstance(key, CanonicalForm)
    assert key.graph().m == 5


# isomorphism class counts of graphs on 4 and 5 vertices; the
# permutation oracle recomputes them and must also induce the same partition.
@pytest.mark.parametrize("n, classes", [(4, 11), (5, 34)])
def test_class_counts_match_permutation_oracle(n, classes):
    ours: dict[bytes, set] = {}
    oracle: dict[tuple, set] = {}
    for g in all_labeled(n):
        ours.setdefault(canonical_form(g), set()).add(g)
        oracle.setdefault(perm_key(n, g.edges), set()).add(g)
    assert len(oracle) == classes
    assert set(map(frozenset, ours.values())) == set(map(frozenset, oracle.values()))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=12, max_extra=12), st.randoms(use_true_random=False))
def test_invariant_under_relabeling(g, rnd):
    key = canonical_form(g)
    for _ in range(20):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == key


def test_random_permutations_of_theta():
    g = make_theta(2, 3, 4)
    rng = random.Random(7)
    key = canonical_form(g)
    for _ in range(200):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == key


def test_canonical_graph_is_isomorphic_relabeling():
    g = make_theta(1, 3, 3)
    order = canonical_labeling(g)
    assert sorted(order) == list(range(g.n))
    c = canonical_graph(g)
    assert perm_key(g.n, g.edges) == perm_key(c.n, c.edges)
    assert canonical_graph(c) == c


def test_coloring_is_respected():
    p = path(3)
    # marking an end vertex vs the middle vertex gives different coloured classes
    a = canonical_graph(p, [0, 1, 1])
    b = canonical_graph(p, [1, 0, 1])
    assert a != b
    assert canonical_graph(p, [1, 1, 0]) == a


def test_vertex_orbits():
    assert vertex_orbits(path(4)) == [[0, 3], [1, 2]]
    assert vertex_orbits(cycle(5)) == [[0, 1, 2, 3, 4]]
    assert vertex_orbits(star(4)) == [[0], [1, 2, 3]]
    assert vertex_orbits(make_theta(1, 2, 2)) == [[0, 1], [2, 3]]


def test_are_isomorphic():
    assert are_isomorphic(cycle(6), cycle(6).relabel([3, 1, 4, 0, 5, 2]))
    assert not are_isomorphic(cycle(6), path(6))
    assert not are_isomorphic(cycle(5), cycle(6))
