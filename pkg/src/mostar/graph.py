"""Immutable simple graph value and the structural helpers built on it."""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Sequence

INF = float("inf")


class GraphError(ValueError):
    """Domain error: the input graph (or a vertex/edge of it) is unsuitable."""


class Edge(NamedTuple):
    u: int
    v: int


def as_edge(u: int, v: int) -> Edge:
    return Edge(u, v) if u < v else Edge(v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; every "modifying" helper returns a new graph.
    """

    __slots__ = ("n", "edges", "adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            seen.add(as_edge(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._edge_set = frozenset(self.edges)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(x)) for x in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return as_edge(u, v) in self._edge_set

    def non_edges(self) -> list[Edge]:
        return [
            Edge(u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if Edge(u, v) not in self._edge_set
        ]

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, [*self.edges, *extra])

    def without_edge(self, u: int, v: int) -> "Graph":
        e = as_edge(u, v)
        if e not in self._edge_set:
            raise GraphError(f"edge {tuple(e)} not in graph")
        return Graph(self.n, [f for f in self.edges if f != e])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def check_edge(self, e: Sequence[int]) -> Edge:
        u, v = e
        edge = as_edge(u, v)
        if edge not in self._edge_set:
            raise GraphError(f"edge {tuple(edge)} not in graph")
        return edge

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges]})"


def bfs_distances(g: Graph, s: int) -> list[float]:
    """Hop distances from ``s``; unreachable vertices get ``INF``."""
    g.check_vertex(s)
    dist: list[float] = [INF] * g.n
    dist[s] = 0
    queue = deque([s])
    adj = g.adj
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] == INF:
                dist[y] = dx
                queue.append(y)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return INF not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph is disconnected")


def cut_edges(g: Graph) -> set[Edge]:
    """Bridges of a connected graph (iterative Tarjan low-link)."""
    require_connected(g)
    if g.n == 0:
        return set()
    adj = g.adj
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[Edge] = set()
    timer = 0
    disc[0] = low[0] = timer
    # frames: (vertex, parent, neighbor cursor)
    stack = [(0, -1, 0)]
    while stack:
        v, parent, i = stack[-1]
        if i < len(adj[v]):
            stack[-1] = (v, parent, i + 1)
            w = adj[v][i]
            if w == parent:
                continue
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, v, 0))
            else:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.add(as_edge(parent, v))
    return bridges


def is_pendent_edge(g: Graph, e: Sequence[int]) -> bool:
    u, v = g.check_edge(e)
    return min(g.degree(u), g.degree(v)) == 1


def pendant_neighbors(g: Graph, v: int) -> list[int]:
    g.check_vertex(v)
    return [w for w in g.adj[v] if g.degree(w) == 1]


def join_at(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify vertex ``v2`` of ``g2`` with vertex ``v1`` of ``g1``.

    Labels of ``g1`` are kept. The remaining vertices of ``g2`` follow in
    increasing order of their old labels, starting at ``g1.n``.
    """
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    mapping = {}
    nxt = g1.n
    for x in range(g2.n):
        if x == v2:
            mapping[x] = v1
        else:
            mapping[x] = nxt
            nxt += 1
    edges = list(g1.edges) + [(mapping[x], mapping[y]) for x, y in g2.edges]
    return Graph(g1.n + g2.n - 1, edges)


def add_pendants(g: Graph, v: int, k: int) -> Graph:
    """Attach ``k`` new degree-1 vertices to ``v`` (labels ``n, n+1, ...``)."""
    g.check_vertex(v)
    if k < 0:
        raise GraphError("pendant count must be non-negative")
    return Graph(g.n + k, [*g.edges, *((v, g.n + i) for i in range(k))])


def cyclomatic_number(g: Graph) -> int:
    """``m - n + 1`` for a connected graph."""
    require_connected(g)
    return g.m - g.n + 1
