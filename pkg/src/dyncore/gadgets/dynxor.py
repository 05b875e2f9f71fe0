"""Prefix XOR as a ladder of OR gate pairs.

g_0 is a ZERO gate and its partner a ONE gate. Pair i is wired straight
(g_{i-1} -> g_i and partner -> partner) when x_i = 0 and crossed when x_i = 1,
so g_i carries x_1 xor ... xor x_i and its partner the negation.
"""
from __future__ import annotations

from typing import List, Sequence

from ..circuit import Label, MonotoneCircuit


class IndexOutOfRange(IndexError):
    pass


def parse_bits(text: str) -> List[int]:
    bits = [int(ch) for ch in text.strip() if not ch.isspace()]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("expected a 0/1 string")
    return bits


class DynXorInstance:
    def __init__(self, x: Sequence[int]):
        n = len(x)
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        self.x = [int(b) & 1 for b in x]
        c = MonotoneCircuit(incremental=True)
        self.g = [c.add_gate(Label.ZERO)]
        self.gbar = [c.add_gate(Label.ONE)]
        for _ in range(n):
            self.g.append(c.add_gate(Label.OR))
            self.gbar.append(c.add_gate(Label.OR))
        self.gstar = c.add_gate(Label.OR)
        c.set_output(self.gstar)
        self.circuit = c
        for i in range(1, n + 1):
            for a, b in self._wires(i, self.x[i - 1]):
                c.insert_wire(a, b)

    def _wires(self, i: int, bit: int):
        g, gb = self.g, self.gbar
        if bit == 0:
            return [(g[i - 1], g[i]), (gb[i - 1], gb[i])]
        return [(gb[i - 1], g[i]), (g[i - 1], gb[i])]

    def _check(self, i: int) -> None:
        if not (1 <= i <= self.n):
            raise IndexOutOfRange(i)

    def update(self, i: int, bit: int) -> None:
        self._check(i)
        bit = int(bit) & 1
        if self.x[i - 1] == bit:
            return
        c = self.circuit
        for a, b in self._wires(i, self.x[i - 1]):
            c.delete_wire(a, b)
        for a, b in self._wires(i, bit):
            c.insert_wire(a, b)
        self.x[i - 1] = bit

    def query(self, i: int) -> int:
        self._check(i)
        c = self.circuit
        c.insert_wire(self.g[i], self.gstar)
        try:
            return c.query_value()
        finally:
            c.delete_wire(self.g[i], self.gstar)


def compile_dynxor(x) -> DynXorInstance:
    return DynXorInstance(x)


def dynxor_update(inst: DynXorInstance, i: int, bit: int) -> None:
    inst.update(i, bit)


def dynxor_query(inst: DynXorInstance, i: int) -> int:
    return inst.query(i)
