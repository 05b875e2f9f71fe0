"""Gadgets for MCVP -> directed (k, l)-core; base case (2, 0).

Or: vertex a has in-arcs from the wires and from c; b has in-arcs from a, c;
c from a, b. One live wire gives a in-degree 2 and the triangle closes.
And: a takes only the two wires, and feeds the 2-cycle b <-> c.
General (k, l) adds a bidirected clique W of size max(k, l) + 1 that is
always in the core: k - 2 of its vertices point at every gadget vertex and
l of them receive an arc from every gadget vertex.
"""
from __future__ import annotations

from typing import Dict

from ..circuit import Label
from ..graph import kl_core
from .base import Builder, Gadget, GadgetLibrary


class KLCoreLibrary(GadgetLibrary):
    kind = "klcore"
    directed = True

    def __init__(self, k: int = 2, l: int = 0):
        if k < 2 or l < 0:
            raise ValueError("(k, l)-core reduction needs k >= 2, l >= 0")
        super().__init__(k, l)

    def params(self):
        return {"k": self.k, "l": self.l}

    def gate(self, label: Label, b: Builder) -> Gadget:
        label = Label(label)
        t = b.target
        if label is Label.ZERO:
            z = b.vertex()
            return Gadget("ZERO", [z], [], [z], z)
        if label is Label.ONE:
            vs = b.vertices(3)
            b.clique(vs)
            return Gadget("ONE", vs, [], [vs[0]], vs[0])
        a, x, y = b.vertices(3)
        t.insert_arc(a, x)
        t.insert_arc(a, y)
        t.insert_arc(x, y)
        t.insert_arc(y, x)
        if label is Label.OR:
            t.insert_arc(y, a)
        return Gadget(label.value, [a, x, y], [a, a], [x, y], x)

    def wire_edges(self, out_port, in_port):
        return [(out_port, in_port)]

    def finish(self, b: Builder, gadgets: Dict[int, Gadget]) -> None:
        k, l = self.k, self.l
        if k == 2 and l == 0:
            return
        everyone = [v for gd in gadgets.values() for v in gd.vertices]
        w = b.vertices(max(k, l) + 1)
        b.clique(w)
        for src in w[:k - 2]:
            for v in everyone:
                b.target.insert_arc(src, v)
        for dst in w[:l]:
            for v in everyone:
                b.target.insert_arc(v, dst)

    def active_set(self, target):
        return kl_core(target, self.k, self.l)

    def port_active(self, active, port) -> bool:
        return port in active
