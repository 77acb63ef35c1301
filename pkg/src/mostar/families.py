"""Constructors for the named graph families and their closed-form edge Mostar values.

Labeling conventions (all constructors are deterministic):

* path ``0-1-...-(n-1)``; cycle the same plus ``(n-1)-0``; star centred at 0;
* ``theta(l1, l2, l3)``: hubs 0 and 1, internal vertices of the three
  0-to-1 paths numbered consecutively from 2, path by path, each path
  walked from hub 0 towards hub 1;
* ``s_m_r(m, r)``: cycle on ``0..r-1`` with ``m - r`` pendants on vertex 0;
* B-families: a core graph plus pendants on one designated core vertex,
  pendants labeled after the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Graph, GraphError, add_pendants, join_at

BASIC_KINDS = ("P", "C", "S")
B_KINDS = ("B", "B1", "B2", "B3", "B4", "B5", "B6")

# smallest size for which each B-family graph exists
B_MIN_SIZE = {"B": 8, "B1": 7, "B2": 6, "B3": 5, "B4": 5, "B5": 6, "B6": 6}

# smallest size from which the closed form below is asserted
CLOSED_FORM_FROM = {"B": 8, "B1": 7, "B2": 6, "B3": 5, "B4": 6, "B5": 6, "B6": 6}

CLOSED_FORMS: dict[str, Callable[[int], int]] = {
    "B": lambda m: m * m - m - 24,
    "B1": lambda m: m * m - 2 * m - 15,
    "B2": lambda m: m * m - 3 * m - 6,
    "B3": lambda m: m * m - 3 * m - 6,
    "B4": lambda m: m * m - 2 * m - 15,
    "B5": lambda m: m * m - m - 28,
    "B6": lambda m: m * m - 2 * m - 16,
}


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"star needs n >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def make_basic(kind: str, n: int) -> Graph:
    builders = {"P": path, "C": cycle, "S": star}
    if kind not in builders:
        raise GraphError(f"unknown basic family {kind!r}")
    return builders[kind](n)


def make_theta(l1: int, l2: int, l3: int) -> Graph:
    if not 1 <= l1 <= l2 <= l3:
        raise GraphError(f"theta lengths must satisfy 1 <= l1 <= l2 <= l3, got {(l1, l2, l3)}")
    if l2 < 2:
        raise GraphError("theta with two paths of length 1 is a multigraph")
    edges = []
    nxt = 2
    for length in (l1, l2, l3):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def make_s_m_r(m: int, r: int) -> Graph:
    if r < 3 or m < r:
        raise GraphError(f"S(m, r) needs m >= r >= 3, got m={m}, r={r}")
    return add_pendants(cycle(r), 0, m - r)


def _b_core(kind: str) -> tuple[Graph, int]:
    if kind == "B":
        return join_at(cycle(4), 0, cycle(4), 0), 0
    if kind == "B1":
        return join_at(cycle(3), 0, cycle(4), 0), 0
    if kind == "B2":
        return join_at(cycle(3), 0, cycle(3), 0), 0
    if kind == "B3":
        return make_theta(1, 2, 2), 0
    if kind == "B4":
        return make_theta(1, 2, 2), 2
    if kind == "B5":
        return make_theta(2, 2, 2), 2
    if kind == "B6":
        return make_theta(1, 2, 3), 0
    raise GraphError(f"unknown B-family {kind!r}")


def make_b_family(kind: str, m: int) -> Graph:
    core, anchor = _b_core(kind)
    if m < B_MIN_SIZE[kind]:
        raise GraphError(f"{kind} needs m >= {B_MIN_SIZE[kind]}, got {m}")
    return add_pendants(core, anchor, m - core.m)


def expected_value(kind: str, m: int) -> int:
    """Closed-form edge Mostar index of ``kind`` at size ``m``."""
    if kind not in CLOSED_FORMS:
        raise GraphError(f"unknown B-family {kind!r}")
    if m < B_MIN_SIZE[kind]:
        raise GraphError(f"{kind} needs m >= {B_MIN_SIZE[kind]}, got {m}")
    return CLOSED_FORMS[kind](m)


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: ``kind`` plus its integer parameters.

    ``P``/``C``/``S`` take a vertex count, ``Theta`` three path lengths,
    ``Smr`` a size and a girth, and the B-families a size.
    """

    kind: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        k, p = self.kind, self.params
        if k in BASIC_KINDS and len(p) == 1:
            return make_basic(k, p[0])
        if k == "Theta" and len(p) == 3:
            return make_theta(*p)
        if k == "Smr" and len(p) == 2:
            return make_s_m_r(*p)
        if k in B_KINDS and len(p) == 1:
            return make_b_family(k, p[0])
        raise GraphError(f"bad family spec {k} {list(p)}")

    @property
    def label(self) -> str:
        if self.kind in B_KINDS:
            return f"{self.kind}_{self.params[0]}"
        if self.kind == "Smr":
            return f"S_{{{self.params[0]},{self.params[1]}}}"
        return f"{self.kind}({','.join(map(str, self.params))})"


FAMILY_KINDS = BASIC_KINDS + ("Theta", "Smr") + B_KINDS


def bicyclic_families(m: int) -> list[FamilySpec]:
    return [FamilySpec(k, (m,)) for k in B_KINDS if m >= B_MIN_SIZE[k]]


def unicyclic_families(m: int) -> list[FamilySpec]:
    return [FamilySpec("Smr", (m, r)) for r in range(3, m + 1)]
