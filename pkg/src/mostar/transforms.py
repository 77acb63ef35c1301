"""Pendant shifting on theta braces and the closed-form index deltas of each shift.

Brace-vertex roles: ``v1``/``v2`` are the two hubs (labels 0 and 1 of
:func:`make_theta`), the remaining roles are internal path vertices in label
order. For theta(1,2,3) that makes ``v3`` the middle of the length-2 path and
``v4``, ``v5`` the length-3 path with ``v4`` next to ``v1``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Sequence

from .families import make_theta
from .graph import Graph, GraphError, pendant_neighbors
from .indices import edge_mostar

BRACES: tuple[tuple[int, int, int], ...] = ((1, 2, 2), (2, 2, 2), (1, 2, 3))


def shift_pendants(g: Graph, source: int, target: int, k: int) -> Graph:
    """Re-anchor ``k`` pendant edges of ``source`` onto ``target``.

    The lowest-labeled pendant neighbours of ``source`` move first.
    """
    g.check_vertex(target)
    if source == target:
        raise GraphError("source and target vertex coincide")
    movable = [p for p in pendant_neighbors(g, source) if p != target]
    if k < 0 or len(movable) < k:
        raise GraphError(f"vertex {source} has {len(movable)} movable pendants, asked for {k}")
    moving = set(movable[:k])
    edges = []
    for u, v in g.edges:
        if u == source and v in moving:
            edges.append((target, v))
        elif v == source and u in moving:
            edges.append((target, u))
        else:
            edges.append((u, v))
    return Graph(g.n, edges)


@dataclass(frozen=True)
class PendantProfile:
    """A theta brace with ``counts[i]`` pendants hanging off role ``v{i+1}``."""

    brace: tuple[int, int, int]
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.brace not in BRACES:
            raise GraphError(f"unsupported brace {self.brace}")
        if len(self.counts) != sum(self.brace) - 1:
            raise GraphError(f"brace {self.brace} has {sum(self.brace) - 1} vertices")
        if min(self.counts) < 0:
            raise GraphError("pendant counts must be non-negative")

    def a(self, i: int) -> int:
        return self.counts[i - 1]

    @property
    def m(self) -> int:
        return sum(self.brace) + sum(self.counts)

    def graph(self) -> Graph:
        core = make_theta(*self.brace)
        edges = list(core.edges)
        nxt = core.n
        for v, k in enumerate(self.counts):
            for _ in range(k):
                edges.append((v, nxt))
                nxt += 1
        return Graph(nxt, edges)


@dataclass(frozen=True)
class Move:
    brace: tuple[int, int, int]
    name: str
    shifts: tuple[tuple[int, int], ...]  # (from role, to role), all pendants moved
    zeroed: tuple[int, ...]  # roles already emptied by earlier moves
    hypothesis: Callable[[PendantProfile], bool]
    hypothesis_text: str
    delta: Callable[[PendantProfile], int]
    delta_text: str
    terms: tuple[tuple[int, tuple[int, ...]], ...]  # (sign, linear form) per edge term

    def apply(self, profile: PendantProfile) -> PendantProfile:
        counts = list(profile.counts)
        for src, dst in self.shifts:
            counts[dst - 1] += counts[src - 1]
            counts[src - 1] = 0
        return PendantProfile(profile.brace, tuple(counts))


def linear_form(expr: str) -> tuple[int, ...]:
    """Coefficients ``(c0, c1, ..., c5)`` of ``c0 + c1*a1 + ... + c5*a5``."""
    coef = [0] * 6
    for sign, tok in re.findall(r"([+-]?)\s*(a\d|\d+)", expr):
        k = -1 if sign == "-" else 1
        if tok[0] == "a":
            coef[int(tok[1:])] += k
        else:
            coef[0] += k * int(tok)
    return tuple(coef)


def _signed_terms(text: str) -> tuple[tuple[int, tuple[int, ...]], ...]:
    return tuple((1 if sign == "+" else -1, linear_form(body))
                 for sign, body in re.findall(r"([+-])\(([^)]*)\)", text))


def _move(brace, name, shifts, zeroed, order, order_text, delta, delta_text, terms):
    def hypothesis(p: PendantProfile) -> bool:
        return all(p.a(i) == 0 for i in zeroed) and order(p.a)

    text = ", ".join(filter(None, ["=".join(f"a{i}" for i in zeroed) + "=0" if zeroed else "", order_text]))
    return Move(brace, name, shifts, zeroed, hypothesis, text,
                lambda p: delta(p.a), delta_text, _signed_terms(terms))


def _any(a):
    return True


MOVES: tuple[Move, ...] = (
    _move((1, 2, 2), "v2->v1", ((2, 1),), (),
          lambda a: a(1) >= a(2) and a(3) >= a(4), "a1>=a2, a3>=a4",
          lambda a: 2 * a(2), "2*a2",
          "+(a1+a2+2-2) -(a1+2-a2-2) +(a1+a2+a4+2-a3-1) -(a1+a4+2-a3-1) "
          "+(a1+a2+a3+2-a4-1) -(a1+a3+2-a4-1) +(a4+2-a3-1) "
          "-(a2+a4+2-a3-1) +(a3+2-a4-1) -(a2+a3+2-a4-1)"),
    _move((1, 2, 2), "v4->v3", ((4, 3),), (2,),
          lambda a: a(3) >= a(4), "a3>=a4",
          lambda a: 8 * a(4), "8*a4",
          "+(a1+2-2) -(a1+2-2) +(a3+a4+1-a1-2) -(a3+1-a1-a4-2) "
          "+(a1+a3+a4+2-1) -(a1+a3+2-a4-1) +(a3+a4+1-2) -(a3+1-a4-2) "
          "+(a3+a4+2-1) -(a3+2-a4-1)"),
    _move((1, 2, 2), "v1->v3", ((1, 3),), (2, 4),
          _any, "",
          lambda a: 3 * a(1), "3*a1",
          "-(a1+2-2) +(a1+a3+1-2) -(a3+1-a1-2) +(a1+a3+2-1) "
          "-(a1+a3+2-1) +(a1+a3+1-2) -(a3+1-2) +(a1+a3+2-1) -(a3+2-1)"),
    _move((2, 2, 2), "v2->v1", ((2, 1),), (),
          lambda a: a(1) >= a(2) and a(3) >= a(4) >= a(5), "a1>=a2, a3>=a4>=a5",
          lambda a: 12 * a(2), "12*a2",
          "+(a1+a2+a4+a5+2-a3-1) -(a1+a4+a5+2-a2-a3-1) "
          "+(a1+a2+a3+a5+2-a4-1) -(a1+a3+a5+2-a2-a4-1) "
          "+(a1+a2+a3+a4+2-a5-1) -(a1+a3+a4+2-a2-a5-1) "
          "+(a1+a2+a3+1-a4-a5-2) -(a1+a3+1-a2-a4-a5-2) "
          "+(a1+a2+a4+1-a3-a5-2) -(a1+a4+1-a2-a3-a5-2) "
          "+(a1+a2+a5+1-a3-a4-2) -(a1+a5+1-a2-a3-a4-2)"),
    _move((2, 2, 2), "v5->v3", ((5, 3),), (2,),
          lambda a: a(3) >= a(4) >= a(5), "a3>=a4>=a5",
          lambda a: 8 * a(5), "8*a5",
          "+(a3+a5+1-a1-a4-2) -(a3+1-a1-a4-a5-2) +(a1+a3+a5+2-a4-1) "
          "-(a1+a3+a5+2-a4-1) +(a1+a3+a4+a5+2-1) -(a1+a3+a4+2-a5-1) "
          "+(a1+a3+a5+1-a4-2) -(a1+a3+1-a4-a5-2) +(a3+a5+2-a1-a4-1) "
          "-(a3+a5+2-a1-a4-1) +(a3+a4+a5+2-a1-1) -(a3+a4+2-a1-a5-1)"),
    _move((2, 2, 2), "v1->v3", ((1, 3),), (2, 4, 5),
          _any, "",
          lambda a: 6 * a(1), "6*a1",
          "+(a1+a3+1-2) -(a3+1-a1-2) +(a1+a3+2-1) -(a1+a3+2-1) "
          "+(a1+a3+2-1) -(a1+a3+2-1) +(a1+a3+1-2) -(a1+a3+1-2) "
          "+(a1+a3+2-1) -(a3+2-a1-1) +(a1+a3+2-1) -(a3+2-a1-1)"),
    _move((1, 2, 3), "v2->v1,v5->v4", ((2, 1), (5, 4)), (),
          lambda a: a(1) + a(4) >= a(2) + a(5), "a1+a4>=a2+a5",
          lambda a: 4 * (a(2) + a(5)), "4*(a2+a5)",
          "+(a1+a2+a4+a5+2-2) -(a1+a4+2-a2-a5-2) +(a1+a2+a4+a5+3-a3-1) "
          "-(a1+a4+3-a3-1) +(3-a3-1) -(a2+a5+3-a3-1) "
          "+(a1+a2+a3+3-a4-a5-1) -(a1+a2+a3+3-a4-a5-1) "
          "+(a1+a2+a3+3-a4-a5-1) -(a1+a2+a3+3-a4-a5-1) "
          "+(a1+a2+a4+a5+2-2) -(a1+a4+2-a2-a5-2)"),
    _move((1, 2, 3), "v4->v1", ((4, 1),), (2, 5),
          _any, "",
          lambda a: 4 * a(4) + a(1) - a(3), "4*a4+a1-a3",
          "+(a1+a4+2-2) -(a1+a4+2-2) +(a1+a4+3-a3-1) -(a1+a4+3-a3-1) "
          "+(3-a3-1) -(3-a3-1) +(a1+a3+a4+3-1) -(a1+a3+3-a4-1) "
          "+(a1+a3+a4+3-1) -(a1+a3+3-a4-1) +(a1+a4+2-2) -(a1+a4+2-2)"),
    _move((1, 2, 3), "v3->v1", ((3, 1),), (2, 4, 5),
          _any, "",
          lambda a: 5 * a(3), "5*a3",
          "+(a1+a3+2-2) -(a1+2-2) +(a1+a3+3-1) -(a1+3-a3-1) "
          "+(a1+a3+3-1) -(a1+a3+3-1) +(a1+a3+2-2) -(a1+2-2) +(3-1) "
          "-(3-a3-1) +(a1+a3+3-1) -(a1+a3+3-1)"),
)


def _normalize_move(name: str) -> str:
    return name.replace("→", "->").replace(" ", "")


def get_move(brace: Sequence[int], name: str) -> Move:
    brace = tuple(brace)
    key = _normalize_move(name)
    for mv in MOVES:
        if mv.brace == brace and mv.name == key:
            return mv
    raise GraphError(f"no move {name!r} for brace {brace}")


def predicted_delta(brace: Sequence[int], move: str, profile: PendantProfile) -> int:
    mv = get_move(brace, move)
    if profile.brace != mv.brace:
        raise GraphError(f"profile brace {profile.brace} does not match move brace {mv.brace}")
    if not mv.hypothesis(profile):
        raise GraphError(f"profile {profile.counts} violates {mv.hypothesis_text}")
    return mv.delta(profile)


def apply_move(profile: PendantProfile, move: Move) -> tuple[Graph, Graph]:
    """Graphs before and after the move, the latter built by :func:`shift_pendants`."""
    before = profile.graph()
    after = before
    for src, dst in move.shifts:
        after = shift_pendants(after, src - 1, dst - 1, profile.a(src))
    return before, after


def observed_delta(profile: PendantProfile, move: Move) -> int:
    before, after = apply_move(profile, move)
    return edge_mostar(after) - edge_mostar(before)


def random_profile(move: Move, rng: random.Random, cap: int = 12,
                   region: bool = False) -> PendantProfile:
    """Rejection-sample a profile with entries in ``0..cap`` meeting the move's hypothesis.

    With ``region`` the profile must also lie in the move's sign region.
    """
    size = sum(move.brace) - 1
    while True:
        counts = tuple(0 if i + 1 in move.zeroed else rng.randint(0, cap) for i in range(size))
        profile = PendantProfile(move.brace, counts)
        if move.hypothesis(profile) and (not region or in_sign_region(move, profile)):
            return profile


def term_values(move: Move, profile: PendantProfile) -> list[int]:
    a = (1, *profile.counts)
    return [sum(c * x for c, x in zip(coef, a)) for _, coef in move.terms]


def in_sign_region(move: Move, profile: PendantProfile) -> bool:
    """True when every per-edge term of the move's case computation is non-negative.

    Each term stands for an absolute value with the bars dropped, so the
    closed-form delta can only be trusted where all of them are >= 0.
    """
    return all(v >= 0 for v in term_values(move, profile))


def term_delta(move: Move, profile: PendantProfile) -> int:
    """Signed sum of the move's per-edge terms."""
    return sum(sign * v for (sign, _), v in zip(move.terms, term_values(move, profile)))


@dataclass
class DeltaCheck:
    move: str
    brace: tuple[int, int, int]
    trials: int
    failures: list[tuple[tuple[int, ...], int, int]]  # counts, predicted, observed

    @property
    def ok(self) -> bool:
        return not self.failures


def check_move(move: Move, trials: int = 200, seed: int = 0, cap: int = 12,
               region: bool = False) -> DeltaCheck:
    """Compare predicted and observed deltas on seeded random profiles.

    By default the prediction is the stated closed form under the stated
    hypothesis; with ``region`` profiles come from the sign region and the
    prediction is :func:`term_delta`.
    """
    rng = random.Random(f"{seed}:{move.brace}:{move.name}")
    failures = []
    for _ in range(trials):
        p = random_profile(move, rng, cap, region)
        pred = term_delta(move, p) if region else predicted_delta(move.brace, move.name, p)
        obs = observed_delta(p, move)
        if pred != obs:
            failures.append((p.counts, pred, obs))
    return DeltaCheck(move.name, move.brace, trials, failures)
