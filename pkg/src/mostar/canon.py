"""Canonical labeling by colour refinement plus individualization backtracking.

The canonical labeling of a graph is the vertex order, among the leaves of a
label-invariant search tree, whose row-major upper-triangle adjacency bit
string is lexicographically smallest. Twins (vertices with equal
neighbourhoods apart from each other) are interchangeable by an automorphism,
so only one twin per class is individualized at each branch point.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from . import graph6


class CanonicalForm(bytes):
    """Isomorphism-class key: graph6 text of the canonically relabeled graph."""

    @property
    def graph6(self) -> str:
        return self.decode("ascii")

    def graph(self) -> Graph:
        return graph6.decode(self.graph6)


def _refine(adj: Sequence[Sequence[int]], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    n = len(adj)
    cell_of = [0] * n
    while True:
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out: list[tuple[int, ...]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = tuple(sorted([cell_of[w] for w in adj[v]]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                for sig in sorted(groups):
                    out.append(tuple(groups[sig]))
        cells = out
        if not split:
            return cells


def _initial_cells(n: int, coloring: Sequence[int] | None) -> list[tuple[int, ...]]:
    if coloring is None:
        return [tuple(range(n))] if n else []
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(coloring[v], []).append(v)
    return [tuple(groups[c]) for c in sorted(groups)]


def canonical_labeling(g: Graph, coloring: Sequence[int] | None = None) -> list[int]:
    """Return ``order`` with ``order[i]`` the vertex placed at position ``i``.

    ``coloring`` (optional) gives an initial vertex colouring that the
    labeling must respect; colour classes are placed in increasing colour.
    """
    n = g.n
    adj = g.adj
    top = n * n - 1
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    edges = g.edges

    best_code: int | None = None
    best_order: list[int] = []
    stack = [_refine(adj, _initial_cells(n, coloring))]
    while stack:
        cells = stack.pop()
        if len(cells) == n:
            order = [c[0] for c in cells]
            pos = [0] * n
            for i, v in enumerate(order):
                pos[v] = i
            code = 0
            for u, v in edges:
                a, b = pos[u], pos[v]
                if a > b:
                    a, b = b, a
                code |= 1 << (top - a * n - b)
            if best_code is None or code < best_code:
                best_code = code
                best_order = order
            continue
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        reps: list[int] = []
        for x in target:
            bx = 1 << x
            for y in reps:
                by = 1 << y
                if masks[x] & ~by == masks[y] & ~bx:
                    break
            else:
                reps.append(x)
        # reversed so the lowest vertex is explored first
        for x in reversed(reps):
            rest = tuple(y for y in target if y != x)
            stack.append(_refine(adj, cells[:idx] + [(x,), rest] + cells[idx + 1:]))
    return best_order


def canonical_graph(g: Graph, coloring: Sequence[int] | None = None) -> Graph:
    order = canonical_labeling(g, coloring)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def canonical_pair(g: Graph) -> tuple[CanonicalForm, Graph]:
    """The canonical form together with the canonically relabeled graph."""
    c = canonical_graph(g)
    return CanonicalForm(graph6.encode(c).encode("ascii")), c


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_pair(g)[0]


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Partition of the vertices into automorphism orbits.

    Two vertices share an orbit iff marking either one yields isomorphic
    vertex-coloured graphs.
    """
    classes: dict[bytes, list[int]] = {}
    for v in range(g.n):
        coloring = [1] * g.n
        coloring[v] = 0
        key = graph6.encode(canonical_graph(g, coloring)).encode("ascii")
        classes.setdefault(key, []).append(v)
    return sorted(classes.values())


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
