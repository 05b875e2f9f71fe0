"""OuMv as dynamic monotone circuit value, and its 3-core image.

Template: a ONE gate, OR gates L_i and R_j, output OR g*, and a permanent
wire L_i -> R_j whenever M[i][j] = 1. A query (u, v) adds ONE -> L_i for
u_i = 1 and R_j -> g* for v_j = 1, reads the circuit value (= u^T M v) and
removes them again.
"""
from __future__ import annotations

from typing import List, Sequence, Set, Tuple

from ..circuit import Label, MonotoneCircuit, expand_degrees
from ..graph import k_core
from .base import Gadget, ReductionArtifact, compile_mcvp
from .kcore import KCoreLibrary, arrow

MODES = ("dynamic", "incremental", "decremental")


def parse_matrix(lines) -> List[List[int]]:
    rows = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        row = [int(ch) for ch in line.replace(" ", "")]
        if any(b not in (0, 1) for b in row):
            raise ValueError(f"matrix rows must be 0/1 strings: {raw.strip()!r}")
        rows.append(row)
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def format_matrix(M) -> str:
    return "".join("".join(str(b) for b in row) + "\n" for row in M)


def direct_uMv(M, u, v) -> int:
    n = len(M)
    return int(any(u[i] and M[i][j] and v[j] for i in range(n) for j in range(n)))


class OuMvInstance:
    def __init__(self, M: Sequence[Sequence[int]], mode: str = "dynamic", incremental: bool = True):
        n = len(M)
        if n < 1 or any(len(r) != n for r in M):
            raise ValueError("M must be a non-empty square matrix")
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        self.M = [list(map(int, r)) for r in M]
        self.N = n
        self.mode = mode
        t = MonotoneCircuit(bounded=False)
        self.one = t.add_gate(Label.ONE)
        self.L = [t.add_gate(Label.OR) for _ in range(n)]
        self.R = [t.add_gate(Label.OR) for _ in range(n)]
        self.gstar = t.add_gate(Label.OR)
        t.set_output(self.gstar)
        for i in range(n):
            for j in range(n):
                if self.M[i][j]:
                    t.insert_wire(self.L[i], self.R[j])
        fanin = {self.gstar: n}
        fanout = {self.one: n}
        for i in range(n):
            fanin[self.L[i]] = 1
            fanout[self.R[i]] = 1
        self.template = t
        self.circuit, self.emap = expand_degrees(t, fanin, fanout, incremental=incremental)
        self._journal: List[Tuple[str, int, int]] = []
        if mode == "decremental":
            for i in range(n):
                self.emap.connect(self.one, self.L[i])
            for j in range(n):
                self.emap.connect(self.R[j], self.gstar)
        self.listeners = []

    def handles(self):
        """Template wires a query may toggle: ONE->L_i and R_j->g*."""
        return ([(self.one, l) for l in self.L], [(r, self.gstar) for r in self.R])

    def lr_wires(self) -> List[Tuple[int, int]]:
        return [(a, b) for a, b in self.template.wires()]

    def _do(self, kind: str, a: int, b: int) -> None:
        if kind == "+":
            sa, sb = self.emap.connect(a, b)
        else:
            sa, sb = self.emap.disconnect(a, b)
        self._journal.append((kind, a, b))
        for f in self.listeners:
            f(kind, sa, sb)

    def rollback(self) -> None:
        while self._journal:
            kind, a, b = self._journal.pop()
            if kind == "+":
                sa, sb = self.emap.disconnect(a, b)
                inv = "-"
            else:
                sa, sb = self.emap.connect(a, b)
                inv = "+"
            for f in self.listeners:
                f(inv, sa, sb)

    def prepare(self, u: Sequence[int], v: Sequence[int]) -> None:
        if len(u) != self.N or len(v) != self.N:
            raise ValueError("vectors must have length N")
        if self.mode == "decremental":
            for i in range(self.N):
                if not u[i]:
                    self._do("-", self.one, self.L[i])
            for j in range(self.N):
                if not v[j]:
                    self._do("-", self.R[j], self.gstar)
        else:
            for i in range(self.N):
                if u[i]:
                    self._do("+", self.one, self.L[i])
            for j in range(self.N):
                if v[j]:
                    self._do("+", self.R[j], self.gstar)

    def query(self, u: Sequence[int], v: Sequence[int]) -> int:
        self.prepare(u, v)
        try:
            return self.circuit.query_value()
        finally:
            self.rollback()


def compile_oumv(M, mode: str = "dynamic") -> OuMvInstance:
    return OuMvInstance(M, mode)


def answer_oumv_query(inst: OuMvInstance, u, v) -> int:
    return inst.query(u, v)


# ---------------------------------------------------------------------------
# 3-core instance with the ONE gate replaced by an arrow fed from s*

class _ArrowOneLibrary(KCoreLibrary):
    def gate(self, label, b):
        if Label(label) is Label.ONE:
            a, o, vs = arrow(b)
            gd = Gadget("ONE", vs, [], [o], o)
            gd.arrow_input = a
            return gd
        return super().gate(label, b)


class OuMvCoreInstance:
    """G_M: K_{s*} = 3 iff u^T M v = 1, else every vertex has core value 2."""

    def __init__(self, M):
        self.inst = OuMvInstance(M, "dynamic", incremental=False)
        lib = _ArrowOneLibrary(3)
        self.art: ReductionArtifact = compile_mcvp(self.inst.circuit, lib)
        one_gadget = self.art.gate_map[self.inst.one]
        self.art.target.insert_edge(self.art.star, one_gadget.arrow_input)
        self.inst.listeners.append(lambda kind, a, b: self.art.apply((kind, a, b)))

    @property
    def target(self):
        return self.art.target

    @property
    def star(self):
        return self.art.star

    def prepare(self, u, v):
        self.inst.prepare(u, v)

    def rollback(self):
        self.inst.rollback()

    def live_gate_vertices(self) -> Set[int]:
        vals = self.inst.circuit.evaluate().value
        return {x for g, gd in self.art.gate_map.items() if vals[g] for x in gd.vertices}

    def query(self, u, v) -> int:
        self.prepare(u, v)
        try:
            return int(self.star in k_core(self.target, 3))
        finally:
            self.rollback()


def compile_oumv_kcore_instance(M) -> OuMvCoreInstance:
    return OuMvCoreInstance(M)
