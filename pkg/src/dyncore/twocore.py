"""Fully dynamic 2-core membership.

HDT keeps a spanning forest F. Every graph edge outside F is "extra", and a
vertex with an incident extra edge is special. A vertex u lies in the 2-core
iff it is special or two different subtrees hanging off u (in F rooted at u)
contain special vertices. The second test is done with the Euler tour: after
rerooting at u, the first and last special vertices v, w of the tour sit in
different subtrees of u exactly when u is on the v-w path, i.e. when
nca(v, w) == u with u as the LCT root.
"""
from __future__ import annotations

from typing import List

from .dynforest import EulerTourForest, HdtConnectivity, LinkCutForest
from .graph import Graph, UnknownVertex, edge_key


class TwoCoreIndex:
    def __init__(self, n: int):
        self.n = n
        self.hdt = HdtConnectivity(n)
        self.ett = EulerTourForest()
        self.lct = LinkCutForest()
        self.extra_degree: List[int] = [0] * n
        for v in range(n):
            self.ett.node(v)

    @classmethod
    def build(cls, g: Graph, n: int = None) -> "TwoCoreIndex":
        if n is None:
            n = max(g.vertices(), default=-1) + 1
        ix = cls(n)
        for u, v in g.edges():
            ix.insert_edge(u, v)
        return ix

    def _bump(self, v: int, delta: int) -> None:
        d = self.extra_degree[v] + delta
        self.extra_degree[v] = d
        self.ett.set_mark(v, d)

    def insert_edge(self, u: int, v: int) -> None:
        ch = self.hdt.insert_edge(u, v)
        if ch.kind == "added":
            self.ett.link(u, v)
            self.lct.link(u, v)
        else:
            self._bump(u, 1)
            self._bump(v, 1)

    def delete_edge(self, u: int, v: int) -> None:
        ch = self.hdt.delete_edge(u, v)
        if ch.kind == "none":
            self._bump(u, -1)
            self._bump(v, -1)
            return
        self.ett.cut(u, v)
        self.lct.cut(u, v)
        if ch.replacement is not None:
            w, z = ch.replacement
            self.ett.link(w, z)
            self.lct.link(w, z)
            self._bump(w, -1)
            self._bump(z, -1)

    def is_in_2core(self, u: int) -> bool:
        if not (0 <= u < self.n):
            raise UnknownVertex(u)
        if self.extra_degree[u] > 0:
            return True
        # u is not special, so its own mark is already 0 and cannot be found
        ett = self.ett
        ett.reroot(u)
        v = ett.first_marked(u)
        if v is None:
            return False
        w = ett.last_marked(u)
        self.lct.evert(u)
        return self.lct.nca(v, w) == u

    def check_consistency(self) -> None:
        """ETT edges == LCT edges == HDT level-0 forest; marks match."""
        forest = set(self.hdt.tree_edges())
        ett_edges = {edge_key(a, b) for a, b in self.ett.arcs}
        assert ett_edges == forest
        for a, b in forest:
            self.lct.evert(a)
            assert self.lct.parent(b) == a
        # same edge count plus every forest edge present means equal edge sets
        roots = {self.lct.find_root(v) for v in range(self.n)}
        assert len(roots) == self.n - len(forest)
        for v in range(self.n):
            assert self.ett.mark(v) == self.extra_degree[v]
        extra = {}
        for e, t in self.hdt.is_tree.items():
            if not t:
                for x in e:
                    extra[x] = extra.get(x, 0) + 1
        assert all(extra.get(v, 0) == self.extra_degree[v] for v in range(self.n))
