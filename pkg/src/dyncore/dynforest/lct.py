"""Link-cut trees (Sleator-Tarjan) with evert and nearest common ancestor."""
from __future__ import annotations

from typing import Dict, Optional

from .ett import NotATreeEdge, SameTree


class _N:
    __slots__ = ("l", "r", "p", "rev", "key")

    def __init__(self, key):
        self.l = self.r = self.p = None
        self.rev = False
        self.key = key


def _is_root(x: _N) -> bool:
    p = x.p
    return p is None or (p.l is not x and p.r is not x)


def _push(x: _N) -> None:
    if x.rev:
        x.l, x.r = x.r, x.l
        if x.l is not None:
            x.l.rev ^= True
        if x.r is not None:
            x.r.rev ^= True
        x.rev = False


def _rotate(x: _N) -> None:
    p = x.p
    g = p.p
    if not _is_root(p):
        if g.l is p:
            g.l = x
        else:
            g.r = x
    x.p = g
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


def _splay(x: _N) -> None:
    # push reversal bits top-down along the path first
    path = [x]
    y = x
    while not _is_root(y):
        y = y.p
        path.append(y)
    for z in reversed(path):
        _push(z)
    while not _is_root(x):
        p = x.p
        if not _is_root(p):
            g = p.p
            if (g.l is p) == (p.l is x):
                _rotate(p)
            else:
                _rotate(x)
        _rotate(x)


def _access(x: _N) -> _N:
    """Make the root-to-x path preferred; returns the last path-parent jumped."""
    last = None
    y = x
    while y is not None:
        _splay(y)
        y.r = last
        last = y
        y = y.p
    _splay(x)
    return last


class LinkCutForest:
    def __init__(self):
        self.nodes: Dict[int, _N] = {}

    def _node(self, v: int) -> _N:
        x = self.nodes.get(v)
        if x is None:
            x = _N(v)
            self.nodes[v] = x
        return x

    def find_root(self, v: int) -> int:
        x = self._node(v)
        _access(x)
        while True:
            _push(x)
            if x.l is None:
                break
            x = x.l
        _splay(x)
        return x.key

    def connected(self, u: int, v: int) -> bool:
        return u == v or self.find_root(u) == self.find_root(v)

    def evert(self, v: int) -> None:
        x = self._node(v)
        _access(x)
        x.rev ^= True
        _push(x)

    def link(self, u: int, v: int) -> None:
        if self.connected(u, v):
            raise SameTree((u, v))
        self.evert(u)
        self._node(u).p = self._node(v)

    def cut(self, u: int, v: int) -> None:
        x = self._node(u)
        y = self._node(v)
        self.evert(u)
        _access(y)
        # with u as root, u-v is an edge iff the path u..y is exactly [u, y]
        _push(y)
        if y.l is not x:
            raise NotATreeEdge((u, v))
        _push(x)
        if x.l is not None or x.r is not None:
            raise NotATreeEdge((u, v))
        y.l = None
        x.p = None

    def nca(self, v: int, w: int) -> Optional[int]:
        """Nearest common ancestor under the current roots, None if apart."""
        if v == w:
            return v
        if not self.connected(v, w):
            return None
        _access(self._node(v))
        return _access(self._node(w)).key

    def parent(self, v: int) -> Optional[int]:
        x = self._node(v)
        _access(x)
        _push(x)
        y = x.l
        if y is None:
            return None
        _push(y)
        while y.r is not None:
            y = y.r
            _push(y)
        _splay(y)
        return y.key
