"""Holm-de Lichtenberg-Thorup fully dynamic connectivity.

Edges carry a level in 0..L. Forest F_i (an EulerTourForest) spans the edges
of level >= i, and F_0 is a spanning forest of the whole graph. In each F_i,
flag channel 0 marks vertices with level-i tree edges and channel 1 marks
vertices with level-i non-tree edges, so the replacement search can find them
inside the smaller tree in O(lg n) each.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from ..graph import AlreadyPresent, NotPresent, SelfLoop, UnknownVertex, edge_key
from .ett import EulerTourForest


@dataclass(frozen=True)
class ForestChange:
    kind: str  # "none", "added", "removed"
    edge: Optional[Tuple[int, int]] = None
    replacement: Optional[Tuple[int, int]] = None

    @property
    def changed(self) -> bool:
        return self.kind != "none"


NO_CHANGE = ForestChange("none")


class HdtConnectivity:
    def __init__(self, n: int):
        self.n = n
        self.L = max(1, (max(n, 1) - 1).bit_length())  # ceil(lg n)
        self.forests: List[EulerTourForest] = [EulerTourForest() for _ in range(self.L + 1)]
        self.tree_adj: List[Dict[int, Set[int]]] = [dict() for _ in range(self.L + 1)]
        self.nontree_adj: List[Dict[int, Set[int]]] = [dict() for _ in range(self.L + 1)]
        self.level: Dict[Tuple[int, int], int] = {}
        self.is_tree: Dict[Tuple[int, int], bool] = {}

    # -- helpers --------------------------------------------------------
    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise UnknownVertex(v)

    def _add_adj(self, table, i, ch, u, v):
        d = table[i]
        s = d.get(u)
        if s is None:
            s = d[u] = set()
        if not s:
            self.forests[i].set_flag(u, ch, True)
        s.add(v)

    def _del_adj(self, table, i, ch, u, v):
        s = table[i][u]
        s.discard(v)
        if not s:
            self.forests[i].set_flag(u, ch, False)

    def _add_tree(self, i, u, v):
        self._add_adj(self.tree_adj, i, 0, u, v)
        self._add_adj(self.tree_adj, i, 0, v, u)

    def _del_tree(self, i, u, v):
        self._del_adj(self.tree_adj, i, 0, u, v)
        self._del_adj(self.tree_adj, i, 0, v, u)

    def _add_nontree(self, i, u, v):
        self._add_adj(self.nontree_adj, i, 1, u, v)
        self._add_adj(self.nontree_adj, i, 1, v, u)

    def _del_nontree(self, i, u, v):
        self._del_adj(self.nontree_adj, i, 1, u, v)
        self._del_adj(self.nontree_adj, i, 1, v, u)

    # -- queries --------------------------------------------------------
    def connected(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return self.forests[0].connected(u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.level

    def is_tree_edge(self, u: int, v: int) -> bool:
        return self.is_tree.get(edge_key(u, v), False)

    def tree_edges(self):
        return [e for e, t in self.is_tree.items() if t]

    def component_size(self, v: int) -> int:
        return self.forests[0].tree_size(v)

    # -- updates --------------------------------------------------------
    def insert_edge(self, u: int, v: int) -> ForestChange:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoop(u)
        e = edge_key(u, v)
        if e in self.level:
            raise AlreadyPresent(e)
        self.level[e] = 0
        if self.forests[0].connected(u, v):
            self.is_tree[e] = False
            self._add_nontree(0, u, v)
            return NO_CHANGE
        self.is_tree[e] = True
        self.forests[0].link(u, v)
        self._add_tree(0, u, v)
        return ForestChange("added", e)

    def delete_edge(self, u: int, v: int) -> ForestChange:
        e = edge_key(u, v)
        lvl = self.level.pop(e, None)
        if lvl is None:
            raise NotPresent((u, v))
        if not self.is_tree.pop(e):
            self._del_nontree(lvl, u, v)
            return NO_CHANGE
        self._del_tree(lvl, u, v)
        forests = self.forests
        for i in range(lvl + 1):
            forests[i].cut(u, v)
        for i in range(lvl, -1, -1):
            rep = self._replace(i, u, v)
            if rep is not None:
                return ForestChange("removed", e, rep)
        return ForestChange("removed", e)

    def _replace(self, i: int, u: int, v: int) -> Optional[Tuple[int, int]]:
        f = self.forests[i]
        if f.tree_size(u) > f.tree_size(v):
            u, v = v, u
        # u's tree is the smaller one; raise its level-i tree edges to i+1
        up = i + 1
        tree_i = self.tree_adj[i]
        while True:
            x = f.find_flagged(u, 0)
            if x is None:
                break
            for y in list(tree_i[x]):
                self._del_tree(i, x, y)
                self._add_tree(up, x, y)
                self.forests[up].link(x, y)
                self.level[edge_key(x, y)] = up
        # scan level-i non-tree edges leaving the small tree
        nontree_i = self.nontree_adj[i]
        while True:
            x = f.find_flagged(u, 1)
            if x is None:
                return None
            for y in list(nontree_i[x]):
                if f.connected(x, y):
                    self._del_nontree(i, x, y)
                    self._add_nontree(up, x, y)
                    self.level[edge_key(x, y)] = up
                else:
                    self._del_nontree(i, x, y)
                    e = edge_key(x, y)
                    self.is_tree[e] = True
                    self._add_tree(i, x, y)
                    for j in range(i + 1):
                        self.forests[j].link(x, y)
                    return e

    # -- invariants (for tests) -------------------------------------------
    def check_invariants(self) -> None:
        for e, lvl in self.level.items():
            u, v = e
            for j in range(lvl + 1):
                assert self.forests[j].connected(u, v), (e, lvl, j)
            if self.is_tree[e]:
                for j in range(lvl + 1):
                    assert self.forests[j].has_edge(u, v)
                assert v in self.tree_adj[lvl][u]
            else:
                assert v in self.nontree_adj[lvl][u]
        for i in range(self.L + 1):
            cap = self.n >> i
            for x in self.forests[i].loops:
                assert self.forests[i].tree_size(x) <= max(cap, 1), (i, x)
