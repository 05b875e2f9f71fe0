"""Full core maintenance baseline with affected-set instrumentation.

The baseline recomputes the decomposition after every update and diffs it
against the previous values. ``counterexample_instance`` builds a family in
which one deletion plus one insertion changes no core value yet reverses the
peeling order of every middle vertex, so any algorithm that maintains a
peeling order must do linear work on an update whose affected set is tiny.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .graph import Graph, InvalidParameters, peeling_order, static_core_decomposition

Edge = Tuple[int, int]
Op = Tuple[str, int, int]


def neighborhood_size(g: Graph, S: Iterable[int], d: int) -> int:
    """Number of vertices within distance ``d`` of some vertex of ``S``."""
    if d < 0:
        raise InvalidParameters("d must be non-negative")
    dist = {}
    q = deque()
    for s in S:
        if s not in dist:
            dist[s] = 0
            q.append(s)
    while q:
        x = q.popleft()
        if dist[x] == d:
            continue
        for y in g.neighbors(x) if g.has_vertex(x) else ():
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return len(dist)


@dataclass
class UpdateReport:
    op: Op
    affected: Set[int]
    neighborhood: Dict[int, int]
    time_ns: int
    changed: Set[int] = field(default_factory=set)

    def line(self) -> str:
        kind, u, v = self.op
        n1 = self.neighborhood.get(1, "-")
        n2 = self.neighborhood.get(2, "-")
        return f"{kind}{u},{v} {len(self.affected)} {n1} {n2} {self.time_ns}"


class MaintainedCoreState:
    """A graph together with its exact core values."""

    def __init__(self, g: Graph):
        self.graph = g
        self.core_value: Dict[int, int] = static_core_decomposition(g)

    def apply(self, op: Op, ds: Sequence[int] = (1, 2)) -> UpdateReport:
        return fcm_apply(self, op, ds)


def fcm_apply(state: MaintainedCoreState, op: Op, ds: Sequence[int] = (1, 2)) -> UpdateReport:
    """Apply ``("+", u, v)`` or ``("-", u, v)`` and report the affected set.

    Only the update and recomputation are timed; the neighborhood sizes are
    instrumentation.
    """
    kind, u, v = op
    g = state.graph
    old = state.core_value
    t0 = time.perf_counter_ns()
    if kind == "+":
        g.insert_edge(u, v)
    elif kind == "-":
        g.delete_edge(u, v)
    else:
        raise ValueError(f"unknown op kind {kind!r}")
    new = static_core_decomposition(g)
    changed = {x for x, c in new.items() if old.get(x) != c}
    t1 = time.perf_counter_ns()
    state.core_value = new
    affected = {u, v} | changed
    hood = {d: neighborhood_size(g, affected, d) for d in ds}
    return UpdateReport(op, affected, hood, t1 - t0, changed)


# ---------------------------------------------------------------------------
# counterexample family

# anchor vertices 0..5; chain m_1..m_{n-6} with ids 6..n-1, m_1 ~ 1, m_last ~ 0
ANCHOR_EDGES: List[Edge] = [(0, 1), (0, 3), (0, 4), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
E1: Edge = (0, 1)
E2: Edge = (1, 4)


def middle_vertices(n: int) -> List[int]:
    return list(range(6, n))


def middle_peel_order(g: Graph, middle: Sequence[int]) -> List[int]:
    ms = set(middle)
    return [x for x in peeling_order(g) if x in ms]


def counterexample_instance(n: int) -> Tuple[Graph, Edge, Edge]:
    """A graph and edges ``e1`` (present) and ``e2`` (absent).

    Deleting ``e1`` then inserting ``e2`` leaves every core value unchanged
    while the lowest-degree-first peeling order (ties to the lowest id) of
    the n - 6 middle vertices is reversed. Both facts are checked here.
    """
    if n < 8:
        raise InvalidParameters("need n >= 8")
    g = Graph(vertices=range(n))
    for a, b in ANCHOR_EDGES:
        g.insert_edge(a, b)
    mids = middle_vertices(n)
    for a, b in zip(mids, mids[1:]):
        g.insert_edge(a, b)
    g.insert_edge(1, mids[0])
    g.insert_edge(0, mids[-1])

    h = g.copy()
    before = static_core_decomposition(h)
    order_before = middle_peel_order(h, mids)
    h.delete_edge(*E1)
    h.insert_edge(*E2)
    after = static_core_decomposition(h)
    order_after = middle_peel_order(h, mids)
    if before != after:
        raise AssertionError("counterexample changed a core value")
    if order_before != mids or order_after != mids[::-1]:
        raise AssertionError("counterexample failed to reverse the middle peeling order")
    return g, E1, E2
