"""Per-edge splits and the Mostar / edge Mostar indices.

The distance from a vertex ``w`` to an edge ``xy`` is ``min(d(w, x), d(w, y))``.
An edge counts towards ``m_u`` when it is strictly closer to ``u`` than to
``v``; edges at equal distance (``uv`` itself included) are equidistant.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .graph import Edge, Graph, bfs_distances, distance_matrix, require_connected


@dataclass(frozen=True)
class EdgeSplit:
    edge: Edge
    m_u: int
    m_v: int
    equidistant: int
    psi: int


@dataclass(frozen=True)
class VertexSplit:
    edge: Edge
    n_u: int
    n_v: int
    equidistant_vertices: int
    contribution: int


def _split_from_rows(g: Graph, e: Edge, du: Sequence[float], dv: Sequence[float]) -> EdgeSplit:
    m_u = m_v = 0
    for x, y in g.edges:
        a = du[x] if du[x] < du[y] else du[y]
        b = dv[x] if dv[x] < dv[y] else dv[y]
        if a < b:
            m_u += 1
        elif b < a:
            m_v += 1
    return EdgeSplit(e, m_u, m_v, g.m - m_u - m_v, abs(m_u - m_v))


def edge_split(g: Graph, e: Sequence[int]) -> EdgeSplit:
    edge = g.check_edge(e)
    require_connected(g)
    return _split_from_rows(g, edge, bfs_distances(g, edge.u), bfs_distances(g, edge.v))


def edge_split_table(g: Graph) -> list[EdgeSplit]:
    require_connected(g)
    dist = distance_matrix(g)
    return [_split_from_rows(g, e, dist[e.u], dist[e.v]) for e in g.edges]


def edge_mostar(g: Graph) -> int:
    require_connected(g)
    dist = distance_matrix(g)
    edges = g.edges
    # vertex-to-edge distance table, one row per vertex
    de = [[r[x] if r[x] < r[y] else r[y] for x, y in edges] for r in dist]
    total = 0
    for u, v in edges:
        ru, rv = de[u], de[v]
        diff = 0
        for a, b in zip(ru, rv):
            if a < b:
                diff += 1
            elif b < a:
                diff -= 1
        total += diff if diff >= 0 else -diff
    return total


def vertex_split(g: Graph, e: Sequence[int]) -> VertexSplit:
    edge = g.check_edge(e)
    require_connected(g)
    du = bfs_distances(g, edge.u)
    dv = bfs_distances(g, edge.v)
    n_u = sum(1 for a, b in zip(du, dv) if a < b)
    n_v = sum(1 for a, b in zip(du, dv) if b < a)
    return VertexSplit(edge, n_u, n_v, g.n - n_u - n_v, abs(n_u - n_v))


def mostar(g: Graph) -> int:
    require_connected(g)
    dist = distance_matrix(g)
    total = 0
    for u, v in g.edges:
        diff = 0
        for a, b in zip(dist[u], dist[v]):
            if a < b:
                diff += 1
            elif b < a:
                diff -= 1
        total += abs(diff)
    return total


def split_table_csv(rows: Sequence[EdgeSplit]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["u", "v", "m_u", "m_v", "eq", "psi"])
    for r in rows:
        w.writerow([r.edge.u, r.edge.v, r.m_u, r.m_v, r.equidistant, r.psi])
    return buf.getvalue()
