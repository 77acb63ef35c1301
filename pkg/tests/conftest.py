"""Independent oracles and strategies shared by the test modules.

The oracles here deliberately avoid the package's own algorithms: distances
come from Floyd-Warshall, isomorphism from minimising over all vertex
permutations.
"""

from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import settings, strategies as st

from mostar.graph import Graph

INF = float("inf")

# reproducible property runs: same examples on every invocation
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")


def floyd_warshall(n: int, edges) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def naive_edge_psi(n: int, edges) -> dict[tuple[int, int], int]:
    edges = [tuple(sorted(e)) for e in edges]
    d = floyd_warshall(n, edges)
    out = {}
    for u, v in edges:
        mu = mv = 0
        for x, y in edges:
            du = min(d[u][x], d[u][y])
            dv = min(d[v][x], d[v][y])
            mu += du < dv
            mv += dv < du
        out[(u, v)] = abs(mu - mv)
    return out


def naive_edge_mostar(n: int, edges) -> int:
    return sum(naive_edge_psi(n, edges).values())


def naive_mostar(n: int, edges) -> int:
    d = floyd_warshall(n, edges)
    total = 0
    for u, v in edges:
        nu = sum(d[u][w] < d[v][w] for w in range(n))
        nv = sum(d[v][w] < d[u][w] for w in range(n))
        total += abs(nu - nv)
    return total


def perm_key(n: int, edges) -> tuple:
    """Lexicographically least relabeled edge list over all permutations."""
    edges = list(edges)
    best = None
    for p in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return (n, best)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9, max_extra: int = 6) -> Graph:
    """Random connected graph: a random recursive tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=max_extra))
        edges |= set(extra)
    return Graph(n, edges)


@st.composite
def relabelings(draw, g: Graph) -> list[int]:
    return draw(st.permutations(range(g.n)))


_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance_record():
    """Callable recording a (criterion, passed, detail) line for the end-of-run summary."""

    def record(name: str, passed: bool, detail: str = "") -> None:
        line = f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        print(line)
        _ACCEPTANCE.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(
            f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
