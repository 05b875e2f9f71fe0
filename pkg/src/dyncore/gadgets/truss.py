"""Gadgets for MCVP -> k-truss (k >= 4), distinguished edge e*.

Edges are either permanent (a K_k through the two endpoints, always in the
k-truss) or mortal. The gadgets only create triangles of two kinds: a "link"
with one permanent and two mortal edges, and a "triple" of three mortal
edges. So a mortal edge survives iff it keeps two live links/triples. For
k > 4 every gadget vertex is joined permanently to k - 4 universal vertices,
which hands every mortal edge k - 4 extra triangles.

Arrow on p q r s t u v, mortal: I=pq a=qr b=pr a'=rs a''=sv b'=pt b''=tu c=uv,
permanent: qs rv rt pu su tv. Triple (I, a, b) closes a ring
a - a' - a'' - c - b'' - b' - b; with I dead the ring unravels from both ends.
"""
from __future__ import annotations

from typing import Dict, List

from ..circuit import Label
from ..graph import edge_key, k_truss
from .base import Builder, Gadget, GadgetLibrary

_ARROW_MORTAL = ["pq", "qr", "pr", "rs", "sv", "pt", "tu", "uv"]
_ARROW_PERM = ["qs", "rv", "rt", "pu", "su", "tv"]


class TrussLibrary(GadgetLibrary):
    kind = "truss"

    def __init__(self, k: int = 4):
        if k < 4:
            raise ValueError("truss reduction needs k >= 4")
        super().__init__(k)

    # -- primitives -------------------------------------------------------
    def perm(self, b: Builder, u: int, v: int) -> List[int]:
        hs = b.vertices(self.k - 2)
        b.edge(u, v)
        for i, h in enumerate(hs):
            b.edge(u, h)
            b.edge(v, h)
            for h2 in hs[i + 1:]:
                b.edge(h, h2)
        return hs

    def half_perm(self, b: Builder, x: int) -> List[int]:
        """Helpers for a permanent edge from x whose other end comes later."""
        hs = b.vertices(self.k - 2)
        for i, h in enumerate(hs):
            b.edge(x, h)
            for h2 in hs[i + 1:]:
                b.edge(h, h2)
        return hs

    def out_port(self, b: Builder, x: int, y: int):
        return (x, y, tuple(self.half_perm(b, x)), tuple(self.half_perm(b, y)))

    def arrow(self, b: Builder, vs: List[int]):
        names = dict(zip("pqrstuv", b.vertices(7)))
        for e in _ARROW_MORTAL:
            b.edge(names[e[0]], names[e[1]])
        for e in _ARROW_PERM:
            self.perm(b, names[e[0]], names[e[1]])
        vs.extend(names.values())
        return (names["p"], names["q"]), (names["u"], names["v"])

    def link_wire(self, b: Builder, out_edge, in_edge) -> None:
        """Permanent internal wire from mortal edge (x, y) into (p, q)."""
        x, y = out_edge
        p, q = in_edge
        b.edge(y, p)
        self.perm(b, x, p)
        self.perm(b, y, q)

    def splitter(self, b: Builder, c, vs: List[int]):
        u, v = c
        w = b.vertex()
        vs.append(w)
        b.edge(u, w)
        b.edge(v, w)
        ports = []
        for d in ((u, w), (v, w)):
            i2, c2 = self.arrow(b, vs)
            self.link_wire(b, d, i2)
            ports.append(c2)
        return ports

    # -- library interface ------------------------------------------------
    def gate(self, label: Label, b: Builder) -> Gadget:
        label = Label(label)
        if label is Label.ZERO:
            x, y = b.vertices(2)
            b.edge(x, y)
            port = self.out_port(b, x, y)
            return Gadget("ZERO", [x, y], [], [port], (x, y))
        if label is Label.ONE:
            x, y = b.vertices(2)
            self.perm(b, x, y)
            port = self.out_port(b, x, y)
            return Gadget("ONE", [x, y], [], [port], (x, y))
        vs: List[int] = []
        if label is Label.OR:
            i_edge, c = self.arrow(b, vs)
            inputs = [i_edge, i_edge]
        else:
            al, be, ga = b.vertices(3)
            vs += [al, be, ga]
            b.edge(al, be)
            b.edge(be, ga)
            b.edge(al, ga)
            i_edge, c = self.arrow(b, vs)
            self.link_wire(b, (al, ga), i_edge)
            inputs = [(al, be), (be, ga)]
        c_b, c_c = self.splitter(b, c, vs)
        outs = [self.out_port(b, *c_b), self.out_port(b, *c_c)]
        return Gadget(label.value, vs, inputs, outs, tuple(c_b))

    def wire_edges(self, out_port, in_port):
        x, y, hx, hy = out_port
        p, q = in_port
        return ([(y, p), (x, p)] + [(p, h) for h in hx]
                + [(y, q)] + [(q, h) for h in hy])

    def finish(self, b: Builder, gadgets: Dict[int, Gadget]) -> None:
        extra = self.k - 4
        if extra <= 0:
            return
        everyone = [v for gd in gadgets.values() for v in gd.vertices]
        uni = b.vertices(extra)
        for i, w in enumerate(uni):
            for w2 in uni[i + 1:]:
                self.perm(b, w, w2)
            for v in everyone:
                self.perm(b, w, v)

    def active_set(self, target):
        return k_truss(target, self.k)

    def port_active(self, active, port) -> bool:
        return edge_key(port[0], port[1]) in active
