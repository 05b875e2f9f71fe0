"""Gap gadgets: value 1 puts s* in the 2k-core, value 0 keeps K_{s*} <= k+1.

And/Or gadgets are a chain of 2k groups of k vertices with consecutive
groups joined completely. Every chain vertex owns one output edge; groups
1..k form output port 0 and groups k+1..2k port 1, each read as a k x k
matrix whose entry [a][b] is wired to vertex b of the consumer's input group.
"""
from __future__ import annotations

from typing import List

from ..circuit import Label
from ..graph import k_core
from .base import Builder, Gadget, GadgetLibrary


class ApproxLibrary(GadgetLibrary):
    kind = "approx"

    def __init__(self, k: int = 2):
        if k < 2:
            raise ValueError("gap reduction needs k >= 2")
        super().__init__(k)

    def _chain(self, b: Builder) -> List[List[int]]:
        k = self.k
        groups = [b.vertices(k) for _ in range(2 * k)]
        for g1, g2 in zip(groups, groups[1:]):
            for x in g1:
                for y in g2:
                    b.edge(x, y)
        return groups

    def gate(self, label: Label, b: Builder) -> Gadget:
        label = Label(label)
        k = self.k
        if label is Label.ZERO:
            zs = b.vertices(k)
            port = [[z] * k for z in zs]
            return Gadget("ZERO", zs, [], [port], zs[0])
        if label is Label.ONE:
            ks = b.vertices(2 * k + 1)
            b.clique(ks)
            port = [[ks[a]] * k for a in range(k)]
            return Gadget("ONE", ks, [], [port], ks[0])
        groups = self._chain(b)
        vs = [v for g in groups for v in g]
        outs = [groups[:k], groups[k:]]
        if label is Label.AND:
            inputs = [groups[0], groups[-1]]
        else:
            ks = b.vertices(2 * k + 1)
            b.clique(ks)
            for x in ks[:k]:
                for y in groups[-1]:
                    b.edge(x, y)
            vs += ks
            inputs = [groups[0], groups[0]]
        return Gadget(label.value, vs, inputs, outs, groups[-1][0])

    def wire_edges(self, out_port, in_port):
        k = self.k
        return [(out_port[a][j], in_port[j]) for a in range(k) for j in range(k)]

    def active_set(self, target):
        return k_core(target, 2 * self.k)

    def port_active(self, active, port) -> bool:
        return all(v in active for v in _flat(port))

    def port_inactive(self, target, port) -> bool:
        high = k_core(target, self.k + 2)
        return not any(v in high for v in _flat(port))


def _flat(port):
    if isinstance(port, (list, tuple)):
        for x in port:
            yield from _flat(x)
    else:
        yield port
