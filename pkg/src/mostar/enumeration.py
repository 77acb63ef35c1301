"""Isomorph-free generation of trees, unicyclic and bicyclic graphs.

Trees grow by leaf addition, deduplicated by a centre-rooted AHU code.
A unicyclic graph of size m is a tree on m vertices plus one non-edge; a
bicyclic graph of size m is a unicyclic graph on m-1 vertices plus one
non-edge (deleting any cycle edge of a bicyclic graph leaves a connected
unicyclic graph, so nothing is missed). Children are deduplicated by
canonical form and emitted in canonical-form order, relabeled canonically.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .canon import CanonicalForm, canonical_pair
from .graph import Graph, GraphError, require_connected

ORACLE_MAX_N = 7


def _rooted_code(adj, root: int, parent: int) -> str:
    return "(" + "".join(sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def tree_centers(t: Graph) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    deg = t.degrees()
    layer = [v for v in range(t.n) if deg[v] == 1]
    left = t.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_code(t: Graph) -> str:
    """Complete isomorphism invariant of a tree."""
    if t.n == 0:
        return ""
    return min(_rooted_code(t.adj, c, -1) for c in tree_centers(t))


def _leaf_orbit_reps(t: Graph) -> list[int]:
    # the code of the tree rooted at v is a complete invariant of (tree, v),
    # so equal codes mean equal orbits
    reps: dict[str, int] = {}
    for v in range(t.n):
        reps.setdefault(_rooted_code(t.adj, v, -1), v)
    return list(reps.values())


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n < 1:
        raise GraphError(f"trees need n >= 1, got {n}")
    if n == 1:
        return (Graph(1),)
    out: dict[str, Graph] = {}
    for t in _trees(n - 1):
        for v in _leaf_orbit_reps(t):
            child = Graph(n, [*t.edges, (v, n - 1)])
            out.setdefault(tree_code(child), child)
    return _canonical_sorted(out.values())


def _canonical_sorted(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    keyed = {}
    for g in graphs:
        key, c = canonical_pair(g)
        keyed.setdefault(key, c)
    return tuple(keyed[k] for k in sorted(keyed))


def _augment_one(parent: Graph) -> dict[CanonicalForm, Graph]:
    out: dict[CanonicalForm, Graph] = {}
    for e in parent.non_edges():
        child = parent.with_edges([e])
        key, c = canonical_pair(child)
        if key not in out:
            out[key] = c
    return out


def _augment_all(parents: Iterable[Graph], jobs: int = 1) -> tuple[Graph, ...]:
    merged: dict[CanonicalForm, Graph] = {}
    parents = list(parents)
    if jobs > 1 and len(parents) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_augment_one, parents, chunksize=max(1, len(parents) // (8 * jobs)))
            for part in parts:
                for k, g in part.items():
                    merged.setdefault(k, g)
    else:
        for p in parents:
            for k, g in _augment_one(p).items():
                merged.setdefault(k, g)
    return tuple(merged[k] for k in sorted(merged))


_UNICYCLIC: dict[int, tuple[Graph, ...]] = {}
_BICYCLIC: dict[int, tuple[Graph, ...]] = {}


def clear_caches() -> None:
    """Forget every generated population (used for cold-start timings)."""
    _trees.cache_clear()
    _UNICYCLIC.clear()
    _BICYCLIC.clear()


def unicyclic_graphs(m: int, jobs: int = 1) -> tuple[Graph, ...]:
    if m < 3:
        raise GraphError(f"unicyclic graphs need m >= 3, got {m}")
    if m not in _UNICYCLIC:
        _UNICYCLIC[m] = _augment_all(_trees(m), jobs)
    return _UNICYCLIC[m]


def bicyclic_graphs(m: int, jobs: int = 1) -> tuple[Graph, ...]:
    if m < 4:
        raise GraphError(f"bicyclic graphs need m >= 4, got {m}")
    if m not in _BICYCLIC:
        _BICYCLIC[m] = () if m == 4 else _augment_all(unicyclic_graphs(m - 1, jobs), jobs)
    return _BICYCLIC[m]


def enumerate_trees(n: int) -> Iterator[Graph]:
    yield from _trees(n)


def enumerate_unicyclic(m: int, jobs: int = 1) -> Iterator[Graph]:
    yield from unicyclic_graphs(m, jobs)


def enumerate_bicyclic(m: int, jobs: int = 1) -> Iterator[Graph]:
    yield from bicyclic_graphs(m, jobs)


def enumerate_kind(kind: str, size: int, jobs: int = 1) -> Iterator[Graph]:
    """``tree`` takes a vertex count, ``unicyclic``/``bicyclic`` an edge count."""
    if kind == "tree":
        return enumerate_trees(size)
    if kind == "unicyclic":
        return enumerate_unicyclic(size, jobs)
    if kind == "bicyclic":
        return enumerate_bicyclic(size, jobs)
    raise GraphError(f"unknown graph kind {kind!r}")


def _mask_connected(n: int, full: int, edges) -> bool:
    if n <= 1:
        return True
    nb = [0] * n
    for u, v in edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    seen = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= nb[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def brute_force_oracle(n: int, m: int) -> Iterator[Graph]:
    """Every connected labeled graph with ``n`` vertices and ``m`` edges, up to isomorphism.

    Labeled graphs with other edge counts are skipped without being built.
    """
    if n > ORACLE_MAX_N:
        raise GraphError(f"oracle refuses n > {ORACLE_MAX_N} (2^{n * (n - 1) // 2} graphs)")
    pairs = list(combinations(range(n), 2))
    seen: set[CanonicalForm] = set()
    found = []
    if not 0 <= m <= len(pairs):
        return iter(())
    full = (1 << n) - 1
    for chosen in combinations(pairs, m):
        if not _mask_connected(n, full, chosen):
            continue
        key, g = canonical_pair(Graph(n, chosen))
        if key not in seen:
            seen.add(key)
            found.append((key, g))
    found.sort()
    return iter([g for _, g in found])


@dataclass(frozen=True)
class BicyclicClass:
    """``G1``: two edge-disjoint cycles; ``G2``: a theta brace.

    For ``G1`` ``cycles`` holds the two cycle lengths (sorted) and
    ``bridge`` the length of the path joining them (0 when they share a
    vertex). For ``G2`` ``brace`` holds the sorted path lengths.
    """

    kind: str
    brace: tuple[int, int, int] | None = None
    cycles: tuple[int, int] | None = None
    bridge: int | None = None


def core(g: Graph) -> tuple[set[int], list[set[int]]]:
    """Vertices surviving repeated removal of degree-1 vertices, and their adjacency."""
    alive = set(range(g.n))
    nbrs = [set(a) for a in g.adj]
    stack = [v for v in alive if len(nbrs[v]) <= 1]
    while stack:
        v = stack.pop()
        if v not in alive or len(nbrs[v]) > 1:
            continue
        alive.discard(v)
        for w in nbrs[v]:
            nbrs[w].discard(v)
            if len(nbrs[w]) == 1:
                stack.append(w)
        nbrs[v] = set()
    return alive, nbrs


def _walk(nbrs: list[set[int]], start: int, first: int) -> tuple[int, int]:
    """Follow a chain of degree-2 vertices; return (end vertex, length)."""
    prev, cur, length = start, first, 1
    while len(nbrs[cur]) == 2:
        prev, cur = cur, next(w for w in nbrs[cur] if w != prev)
        length += 1
    return cur, length


def classify_bicyclic(g: Graph) -> BicyclicClass:
    require_connected(g)
    if g.m != g.n + 1:
        raise GraphError(f"not bicyclic: n={g.n}, m={g.m}")
    alive, nbrs = core(g)
    branch = sorted(v for v in alive if len(nbrs[v]) > 2)
    if len(branch) == 1:
        # figure eight: each cycle is walked once from either end
        walks = sorted(_walk(nbrs, branch[0], w)[1] for w in nbrs[branch[0]])
        return BicyclicClass("G1", cycles=(walks[0], walks[2]), bridge=0)
    if len(branch) != 2:
        raise GraphError(f"unexpected bicyclic core with branch vertices {branch}")
    x, y = branch
    loops, paths = [], []
    for w in sorted(nbrs[x]):
        end, length = _walk(nbrs, x, w)
        (loops if end == x else paths).append(length)
    if not loops:
        a, b, c = sorted(paths)
        return BicyclicClass("G2", brace=(a, b, c))
    # dumbbell: one loop at each branch vertex joined by a path
    loop_y = []
    for w in sorted(nbrs[y]):
        end, length = _walk(nbrs, y, w)
        if end == y:
            loop_y.append(length)
    c1, c2 = loops[0], loop_y[0]
    lo, hi = sorted((c1, c2))
    return BicyclicClass("G1", cycles=(lo, hi), bridge=paths[0])
