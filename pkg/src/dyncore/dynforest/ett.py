"""Euler tour forest on splay trees.

Each vertex owns a self-loop node; each tree edge owns two arc nodes. A tree
is a splay tree whose in-order sequence is an Euler tour of that tree. Loop
nodes carry two flag channels (0 and 1) whose subtree counts are maintained
as aggregates; channel 0 doubles as the "marked vertex" channel.
"""
from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Tuple


class SameTree(Exception):
    pass


class NotATreeEdge(KeyError):
    pass


class Node:
    __slots__ = ("l", "r", "p", "u", "v", "cnt", "a0", "a1", "f0", "f1")

    def __init__(self, u, v):
        self.l = self.r = self.p = None
        self.u = u
        self.v = v
        loop = 1 if u == v else 0
        self.cnt = loop
        self.a0 = self.a1 = 0
        self.f0 = self.f1 = 0

    def __repr__(self):
        return f"Node({self.u},{self.v})"


def _pull(x: Node) -> None:
    c = 1 if x.u == x.v else 0
    a0 = x.f0
    a1 = x.f1
    l = x.l
    if l is not None:
        c += l.cnt
        a0 += l.a0
        a1 += l.a1
    r = x.r
    if r is not None:
        c += r.cnt
        a0 += r.a0
        a1 += r.a1
    x.cnt = c
    x.a0 = a0
    x.a1 = a1


def _rotate(x: Node) -> None:
    p = x.p
    g = p.p
    if p.l is x:
        b = x.r
        p.l = b
        x.r = p
    else:
        b = x.l
        p.r = b
        x.l = p
    if b is not None:
        b.p = p
    p.p = x
    x.p = g
    if g is not None:
        if g.l is p:
            g.l = x
        else:
            g.r = x
    _pull(p)


def splay(x: Node) -> None:
    while x.p is not None:
        p = x.p
        g = p.p
        if g is not None:
            if (g.l is p) == (p.l is x):
                _rotate(p)
            else:
                _rotate(x)
        _rotate(x)
    _pull(x)


def _root(x: Node) -> Node:
    while x.p is not None:
        x = x.p
    return x


def _first(x: Node) -> Node:
    while x.l is not None:
        x = x.l
    return x


def _last(x: Node) -> Node:
    while x.r is not None:
        x = x.r
    return x


def _join(a: Optional[Node], b: Optional[Node]) -> Optional[Node]:
    """Concatenate two splay trees given by their roots."""
    if a is None:
        return b
    if b is None:
        return a
    m = _last(a)
    splay(m)
    m.r = b
    b.p = m
    _pull(m)
    return m


def _split_before(x: Node) -> Tuple[Optional[Node], Node]:
    """Split x's sequence into (strictly before x, x and after)."""
    splay(x)
    left = x.l
    if left is not None:
        left.p = None
        x.l = None
        _pull(x)
    return left, x


def _split_after(x: Node) -> Tuple[Node, Optional[Node]]:
    splay(x)
    right = x.r
    if right is not None:
        right.p = None
        x.r = None
        _pull(x)
    return x, right


class EulerTourForest:
    """Dynamic forest over vertices; vertex nodes are created lazily."""

    def __init__(self):
        self.loops: Dict[int, Node] = {}
        self.arcs: Dict[Tuple[int, int], Node] = {}
        self.marks: Dict[int, int] = {}

    # -- vertices -------------------------------------------------------
    def node(self, v: int) -> Node:
        x = self.loops.get(v)
        if x is None:
            x = Node(v, v)
            self.loops[v] = x
        return x

    def connected(self, u: int, v: int) -> bool:
        if u == v:
            return True
        x = self.loops.get(u)
        y = self.loops.get(v)
        if x is None or y is None:
            return False
        splay(x)
        return _root(y) is x

    def tree_size(self, v: int) -> int:
        x = self.loops.get(v)
        if x is None:
            return 1
        splay(x)
        return x.cnt

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    # -- structure ------------------------------------------------------
    def reroot(self, u: int) -> None:
        x = self.node(u)
        left, right = _split_before(x)
        _join(right, left)

    def link(self, u: int, v: int) -> None:
        if self.connected(u, v):
            raise SameTree((u, v))
        self.reroot(u)
        self.reroot(v)
        x = self.loops[u]
        y = self.loops[v]
        uv = Node(u, v)
        vu = Node(v, u)
        self.arcs[(u, v)] = uv
        self.arcs[(v, u)] = vu
        splay(x)
        splay(y)
        _join(_join(_join(x, uv), y), vu)

    def cut(self, u: int, v: int) -> None:
        a = self.arcs.pop((u, v), None)
        if a is None:
            raise NotATreeEdge((u, v))
        b = self.arcs.pop((v, u))
        if _precedes(b, a):
            a, b = b, a
        # sequence is  L a M b R ; M becomes one tour, L R the other
        left, _ = _split_before(a)
        _, rest = _split_after(a)
        _split_before(b)
        _, right = _split_after(b)
        _join(left, right)

    # -- flags ----------------------------------------------------------
    def set_flag(self, v: int, channel: int, on: bool) -> None:
        x = self.node(v)
        bit = 1 if on else 0
        if channel == 0:
            if x.f0 == bit:
                return
            splay(x)
            x.f0 = bit
        else:
            if x.f1 == bit:
                return
            splay(x)
            x.f1 = bit
        _pull(x)

    def get_flag(self, v: int, channel: int) -> bool:
        x = self.loops.get(v)
        if x is None:
            return False
        return bool(x.f0 if channel == 0 else x.f1)

    def flagged_count(self, v: int, channel: int = 0) -> int:
        x = self.loops.get(v)
        if x is None:
            return 0
        splay(x)
        return x.a0 if channel == 0 else x.a1

    def find_flagged(self, v: int, channel: int = 0, last: bool = False) -> Optional[int]:
        """First (or last) flagged vertex in tour order of v's tree."""
        x = self.loops.get(v)
        if x is None:
            return None
        splay(x)
        if channel == 0:
            if x.a0 == 0:
                return None
            while True:
                near, far = (x.r, x.l) if last else (x.l, x.r)
                if near is not None and near.a0:
                    x = near
                elif x.f0:
                    break
                else:
                    x = far
        else:
            if x.a1 == 0:
                return None
            while True:
                near, far = (x.r, x.l) if last else (x.l, x.r)
                if near is not None and near.a1:
                    x = near
                elif x.f1:
                    break
                else:
                    x = far
        splay(x)
        return x.u

    # -- marks (channel 0 with a count) ---------------------------------
    def set_mark(self, v: int, count: int) -> None:
        if count < 0:
            raise ValueError("mark must be non-negative")
        if count:
            self.marks[v] = count
        else:
            self.marks.pop(v, None)
        self.set_flag(v, 0, count > 0)

    def mark(self, v: int) -> int:
        return self.marks.get(v, 0)

    def first_marked(self, v: int) -> Optional[int]:
        return self.find_flagged(v, 0, last=False)

    def last_marked(self, v: int) -> Optional[int]:
        return self.find_flagged(v, 0, last=True)

    # -- debugging ------------------------------------------------------
    def tour(self, v: int) -> List[Tuple[int, int]]:
        """Materialized arc sequence of v's tree."""
        x = self.node(v)
        out = []
        stack = []
        cur: Optional[Node] = _root(x)
        while stack or cur is not None:
            while cur is not None:
                stack.append(cur)
                cur = cur.l
            cur = stack.pop()
            out.append((cur.u, cur.v))
            cur = cur.r
        return out

    def tours(self) -> Iterator[List[Tuple[int, int]]]:
        seen = set()
        for v, x in self.loops.items():
            r = _root(x)
            if id(r) in seen:
                continue
            seen.add(id(r))
            yield self.tour(v)


def _precedes(x: Node, y: Node) -> bool:
    """True if x comes before y in their common sequence."""
    splay(y)
    prev = x
    cur = x.p
    while cur is not y:
        prev = cur
        cur = cur.p
    return y.l is prev


def check_tour(tour: List[Tuple[int, int]]) -> bool:
    """Validity of a cyclic Euler tour sequence (arcs and self-loops)."""
    if not tour:
        return False
    loops = [a for a in tour if a[0] == a[1]]
    if len(set(loops)) != len(loops):
        return False
    edges = [a for a in tour if a[0] != a[1]]
    if len(set(edges)) != len(edges):
        return False
    es = set(edges)
    if any((v, u) not in es for u, v in edges):
        return False
    if len(edges) != 2 * (len(loops) - 1):
        return False
    vs = {a[0] for a in loops}
    if any(u not in vs or v not in vs for u, v in edges):
        return False
    # consecutive arcs share an endpoint; the tour closes on its start
    for i in range(len(tour)):
        a, b = tour[i], tour[(i + 1) % len(tour)]
        if a[1] != b[0]:
            return False
    # tree check: visiting order forms a DFS (arc v->w appears before w->v,
    # and the stack discipline holds)
    stack = [tour[0][0]]
    for u, v in tour:
        if u == v:
            continue
        if len(stack) >= 2 and stack[-2] == v:
            stack.pop()
        else:
            stack.append(v)
    return stack == [tour[0][0]]
