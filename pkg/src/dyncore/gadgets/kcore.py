"""Gadgets for MCVP -> k-core (k >= 3), maximum degree 4 when k = 3.

The arrow is six vertices a, b, c, d, e, o with edges
ab ac bc bd ce co de do eo. Inside the arrow every vertex but a has degree 3
and a has degree 2, so the arrow sits in the 3-core exactly when a receives
one more live edge; if a dies the whole arrow unravels from a to o.
"""
from __future__ import annotations

from typing import Dict, List, Tuple

from ..circuit import Label
from ..graph import k_core
from .base import Builder, Gadget, GadgetLibrary

ARROW_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]


def arrow(b: Builder) -> Tuple[int, int, List[int]]:
    """Returns (input vertex, output vertex, all vertices)."""
    vs = b.vertices(6)
    for i, j in ARROW_EDGES:
        b.edge(vs[i], vs[j])
    return vs[0], vs[5], vs


class KCoreLibrary(GadgetLibrary):
    kind = "kcore"

    def __init__(self, k: int = 3):
        if k < 3:
            raise ValueError("k-core reduction needs k >= 3")
        super().__init__(k)

    def gate(self, label: Label, b: Builder) -> Gadget:
        label = Label(label)
        if label is Label.ZERO:
            z = b.vertex()
            return Gadget("ZERO", [z], [], [z], z)
        if label is Label.ONE:
            vs = b.vertices(4)
            b.clique(vs)
            return Gadget("ONE", vs, [], [vs[0]], vs[0])
        vs: List[int] = []
        if label is Label.AND:
            j = b.vertex()
            a, o, av = arrow(b)
            b.edge(j, a)
            vs += [j] + av
            inputs = [j, j]
        else:
            a, o, av = arrow(b)
            vs += av
            inputs = [a, a]
        # splitter: one vertex fanning out into two fresh arrows
        s = b.vertex()
        b.edge(o, s)
        outs = []
        for _ in range(2):
            a2, o2, av2 = arrow(b)
            b.edge(s, a2)
            vs += av2
            outs.append(o2)
        vs.append(s)
        return Gadget(label.value, vs, inputs, outs, outs[0])

    def wire_edges(self, out_port, in_port):
        return [(out_port, in_port)]

    def finish(self, b: Builder, gadgets: Dict[int, Gadget]) -> None:
        extra = self.k - 3
        if extra <= 0:
            return
        everyone = [v for gd in gadgets.values() for v in gd.vertices]
        uni = b.vertices(extra)
        b.clique(uni)
        for w in uni:
            for v in everyone:
                b.edge(w, v)

    def active_set(self, target):
        return k_core(target, self.k)

    def port_active(self, active, port) -> bool:
        return port in active
