"""Monotone Boolean circuits with dynamic wires.

Gates are labelled ZERO, ONE, AND or OR. A missing input counts as 0, so an
AND with fewer than two inputs evaluates to 0 and an OR with none to 0.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .graph import AlreadyPresent, NotPresent


class Label(enum.Enum):
    ZERO = "ZERO"
    ONE = "ONE"
    AND = "AND"
    OR = "OR"


IN_CAP = {Label.ZERO: 0, Label.ONE: 0, Label.AND: 2, Label.OR: 2}
OUT_CAP = {Label.ZERO: 1, Label.ONE: 1, Label.AND: 2, Label.OR: 2}


class CircuitError(Exception):
    pass


class DegreeCapViolation(CircuitError):
    pass


class WouldCreateCycle(CircuitError):
    pass


@dataclass
class EvaluationResult:
    value: Dict[int, int]
    circuit_value: int


def gate_fn(label: Label, inputs: Sequence[int]) -> int:
    if label is Label.ZERO:
        return 0
    if label is Label.ONE:
        return 1
    if label is Label.OR:
        return 1 if any(inputs) else 0
    # AND over exactly two positions, absent ones are 0
    return 1 if len(inputs) >= 2 and all(inputs) else 0


class MonotoneCircuit:
    """Labelled DAG. With ``bounded`` the MCVP degree caps are enforced."""

    def __init__(self, bounded: bool = True, incremental: bool = False):
        self.labels: Dict[int, Label] = {}
        self.ins: Dict[int, Set[int]] = {}
        self.outs: Dict[int, Set[int]] = {}
        self.output: Optional[int] = None
        self.bounded = bounded
        self.incremental = incremental
        self._values: Optional[Dict[int, int]] = None
        self._next = 0

    # -- construction -----------------------------------------------------
    def add_gate(self, label: Label, gid: Optional[int] = None) -> int:
        if gid is None:
            gid = self._next
        if gid in self.labels:
            raise AlreadyPresent(gid)
        self._next = max(self._next, gid + 1)
        self.labels[gid] = Label(label)
        self.ins[gid] = set()
        self.outs[gid] = set()
        if self._values is not None:
            self._values[gid] = gate_fn(self.labels[gid], [])
        return gid

    def set_output(self, gid: int) -> None:
        if gid not in self.labels:
            raise KeyError(gid)
        if self.bounded and self.outs[gid]:
            raise DegreeCapViolation(f"output gate {gid} has out-wires")
        self.output = gid

    @property
    def size(self) -> int:
        return len(self.labels)

    def gates(self) -> Iterable[int]:
        return self.labels.keys()

    def wires(self) -> List[Tuple[int, int]]:
        return [(a, b) for a, bs in self.outs.items() for b in bs]

    def has_wire(self, a: int, b: int) -> bool:
        return b in self.outs.get(a, ())

    def in_cap(self, g: int) -> int:
        return IN_CAP[self.labels[g]]

    def out_cap(self, g: int) -> int:
        return 0 if g == self.output else OUT_CAP[self.labels[g]]

    def can_insert(self, a: int, b: int) -> bool:
        try:
            self._check_insert(a, b)
        except (CircuitError, AlreadyPresent, KeyError):
            return False
        return True

    def _reaches(self, src: int, dst: int) -> bool:
        if src == dst:
            return True
        seen = {src}
        stack = [src]
        outs = self.outs
        while stack:
            x = stack.pop()
            for y in outs[x]:
                if y == dst:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def _check_insert(self, a: int, b: int) -> None:
        if a not in self.labels or b not in self.labels:
            raise KeyError((a, b))
        if b in self.outs[a]:
            raise AlreadyPresent((a, b))
        if self.bounded:
            if len(self.ins[b]) + 1 > self.in_cap(b):
                raise DegreeCapViolation(f"in-degree cap of gate {b} ({self.labels[b].value})")
            if len(self.outs[a]) + 1 > self.out_cap(a):
                raise DegreeCapViolation(f"out-degree cap of gate {a} ({self.labels[a].value})")
        elif self.labels[b] in (Label.ZERO, Label.ONE):
            raise DegreeCapViolation(f"constant gate {b} takes no inputs")
        if self._reaches(b, a):
            raise WouldCreateCycle((a, b))

    def insert_wire(self, a: int, b: int) -> None:
        self._check_insert(a, b)
        self.outs[a].add(b)
        self.ins[b].add(a)
        if self._values is not None:
            self._propagate(b)

    def delete_wire(self, a: int, b: int) -> None:
        if b not in self.outs.get(a, ()):
            raise NotPresent((a, b))
        self.outs[a].discard(b)
        self.ins[b].discard(a)
        if self._values is not None:
            self._propagate(b)

    # -- evaluation -------------------------------------------------------
    def topological_order(self) -> List[int]:
        indeg = {g: len(s) for g, s in self.ins.items()}
        order = [g for g, d in indeg.items() if d == 0]
        i = 0
        while i < len(order):
            g = order[i]
            i += 1
            for h in self.outs[g]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    order.append(h)
        return order

    def evaluate(self) -> EvaluationResult:
        val: Dict[int, int] = {}
        labels = self.labels
        ins = self.ins
        for g in self.topological_order():
            val[g] = gate_fn(labels[g], [val[x] for x in ins[g]])
        cv = val[self.output] if self.output is not None else 0
        return EvaluationResult(val, cv)

    def _propagate(self, start: int) -> None:
        # worklist to the unique fixpoint; fine because the circuit is a DAG
        vals = self._values
        labels, ins, outs = self.labels, self.ins, self.outs
        work = [start]
        while work:
            g = work.pop()
            nv = gate_fn(labels[g], [vals[x] for x in ins[g]])
            if nv != vals[g]:
                vals[g] = nv
                work.extend(outs[g])

    def value(self, g: int) -> int:
        if self.incremental:
            if self._values is None:
                self._values = self.evaluate().value
            return self._values[g]
        return self.evaluate().value[g]

    def query_value(self) -> int:
        if self.output is None:
            return 0
        return self.value(self.output)

    # -- misc -------------------------------------------------------------
    def copy(self) -> "MonotoneCircuit":
        c = MonotoneCircuit(self.bounded, self.incremental)
        c.labels = dict(self.labels)
        c.ins = {g: set(s) for g, s in self.ins.items()}
        c.outs = {g: set(s) for g, s in self.outs.items()}
        c.output = self.output
        c._next = self._next
        return c

    def snapshot(self) -> Tuple:
        """Hashable description, for bit-identical comparisons."""
        return (tuple(sorted((g, l.value) for g, l in self.labels.items())),
                tuple(sorted(self.wires())), self.output)

    def check_invariants(self) -> None:
        assert len(self.topological_order()) == len(self.labels), "cycle"
        if self.bounded:
            for g in self.labels:
                assert len(self.ins[g]) <= self.in_cap(g), g
                assert len(self.outs[g]) <= self.out_cap(g), g


def oracle_evaluate(c: MonotoneCircuit) -> Dict[int, int]:
    """Memoized recursion straight from the gate definitions."""
    memo: Dict[int, int] = {}

    def val(g: int) -> int:
        if g in memo:
            return memo[g]
        stack = [(g, False)]
        while stack:
            x, ready = stack.pop()
            if x in memo:
                continue
            if ready:
                ins = [memo[y] for y in c.ins[x]]
                lab = c.labels[x]
                if lab is Label.ZERO:
                    memo[x] = 0
                elif lab is Label.ONE:
                    memo[x] = 1
                elif lab is Label.OR:
                    memo[x] = int(sum(ins) > 0)
                else:
                    memo[x] = int(len(ins) == 2 and sum(ins) == 2)
            else:
                stack.append((x, True))
                stack.extend((y, False) for y in c.ins[x] if y not in memo)
        return memo[g]

    return {g: val(g) for g in c.labels}


class Journal:
    """Records wire operations so they can be undone in reverse order."""

    def __init__(self):
        self.ops: List[Tuple[str, int, int]] = []

    def insert(self, c: MonotoneCircuit, a: int, b: int) -> None:
        c.insert_wire(a, b)
        self.ops.append(("+", a, b))

    def delete(self, c: MonotoneCircuit, a: int, b: int) -> None:
        c.delete_wire(a, b)
        self.ops.append(("-", a, b))

    def rollback(self, c: MonotoneCircuit) -> None:
        while self.ops:
            op, a, b = self.ops.pop()
            if op == "+":
                c.delete_wire(a, b)
            else:
                c.insert_wire(a, b)


# ---------------------------------------------------------------------------
# degree expansion

@dataclass
class ExpansionMap:
    """Slot bookkeeping between an unbounded template and its expansion."""

    circuit: MonotoneCircuit
    in_slots: Dict[int, List[int]] = field(default_factory=dict)
    out_slots: Dict[int, List[int]] = field(default_factory=dict)
    free_in: Dict[int, List[int]] = field(default_factory=dict)
    free_out: Dict[int, List[int]] = field(default_factory=dict)
    wire_to: Dict[Tuple[int, int], Tuple[int, int]] = field(default_factory=dict)

    def connect(self, a: int, b: int, journal: Optional[Journal] = None) -> Tuple[int, int]:
        if (a, b) in self.wire_to:
            raise AlreadyPresent((a, b))
        if not self.free_out.get(a) or not self.free_in.get(b):
            raise DegreeCapViolation(f"no free slot for template wire {a}->{b}")
        sa = self.free_out[a].pop()
        sb = self.free_in[b].pop()
        try:
            if journal is None:
                self.circuit.insert_wire(sa, sb)
            else:
                journal.insert(self.circuit, sa, sb)
        except Exception:
            self.free_out[a].append(sa)
            self.free_in[b].append(sb)
            raise
        self.wire_to[(a, b)] = (sa, sb)
        return sa, sb

    def disconnect(self, a: int, b: int, journal: Optional[Journal] = None) -> Tuple[int, int]:
        try:
            sa, sb = self.wire_to.pop((a, b))
        except KeyError:
            raise NotPresent((a, b)) from None
        if journal is None:
            self.circuit.delete_wire(sa, sb)
        else:
            journal.delete(self.circuit, sa, sb)
        self.free_out[a].append(sa)
        self.free_in[b].append(sb)
        return sa, sb

    def connected(self, a: int, b: int) -> bool:
        return (a, b) in self.wire_to


def expand_degrees(template: MonotoneCircuit,
                   fanin: Optional[Dict[int, int]] = None,
                   fanout: Optional[Dict[int, int]] = None,
                   incremental: bool = False) -> Tuple[MonotoneCircuit, ExpansionMap]:
    """Replace high-degree gates by balanced binary trees of gates.

    A gate with declared fan-in d > 2 becomes a tree of d-1 gates with its own
    label, whose d leaf positions are the input slots; fan-out d > cap becomes
    a tree of OR gates below the gate. Template gate ids are kept as the tree
    roots. Existing template wires are routed through ``ExpansionMap.connect``.
    """
    fanin = dict(fanin or {})
    fanout = dict(fanout or {})
    out = MonotoneCircuit(bounded=True, incremental=incremental)
    for g, lab in template.labels.items():
        out.add_gate(lab, g)
    out._next = max(template._next, out._next)
    if template.output is not None:
        out.output = template.output
    emap = ExpansionMap(out)

    for g, lab in template.labels.items():
        din = max(fanin.get(g, 0), len(template.ins[g]))
        dout = max(fanout.get(g, 0), len(template.outs[g]))
        emap.in_slots[g] = _input_tree(out, g, lab, din)
        cap = 0 if g == template.output else OUT_CAP[lab]
        if g == template.output and dout:
            raise DegreeCapViolation("output gate cannot have out-slots")
        emap.out_slots[g] = _output_tree(out, g, cap, dout)
        # pop() hands out slots from the end; reverse to hand out in order
        emap.free_in[g] = list(reversed(emap.in_slots[g]))
        emap.free_out[g] = list(reversed(emap.out_slots[g]))

    for a, b in template.wires():
        emap.connect(a, b)
    return out, emap


def _input_tree(c: MonotoneCircuit, root: int, lab: Label, d: int) -> List[int]:
    if lab in (Label.ZERO, Label.ONE):
        if d:
            raise DegreeCapViolation("constant gates take no inputs")
        return []
    if d <= 2:
        return [root] * d
    slots: List[int] = []

    def build(gate: int, k: int) -> None:
        # gate serves k >= 2 leaves, split between its two input positions
        for part in (k - k // 2, k // 2):
            if part == 1:
                slots.append(gate)
            else:
                child = c.add_gate(lab)
                c.insert_wire(child, gate)
                build(child, part)

    build(root, d)
    return slots


def _output_tree(c: MonotoneCircuit, root: int, cap: int, d: int) -> List[int]:
    if d <= cap:
        return [root] * d
    if cap == 0:
        raise DegreeCapViolation(f"gate {root} cannot have out-slots")
    slots: List[int] = []

    def build(k: int, parent: int) -> None:
        if k == 1:
            slots.append(parent)
            return
        g = c.add_gate(Label.OR)
        c.insert_wire(parent, g)
        build(k - k // 2, g)
        build(k // 2, g)

    # split d slots over the root's cap branches as evenly as possible
    parts = [d // cap + (1 if i < d % cap else 0) for i in range(cap)]
    for k in parts:
        if k:
            build(k, root)
    return slots


# ---------------------------------------------------------------------------
# text format

def format_circuit(c: MonotoneCircuit) -> str:
    lines = [f"gate {g} {c.labels[g].value}" for g in sorted(c.labels)]
    lines += [f"wire {a} {b}" for a, b in sorted(c.wires())]
    if c.output is not None:
        lines.append(f"output {c.output}")
    return "\n".join(lines) + "\n"


def parse_circuit(lines: Iterable[str], bounded: bool = True) -> MonotoneCircuit:
    c = MonotoneCircuit(bounded=bounded)
    wires = []
    output = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "gate" and len(parts) == 3:
                c.add_gate(Label(parts[2].upper()), int(parts[1]))
            elif parts[0] == "wire" and len(parts) == 3:
                wires.append((int(parts[1]), int(parts[2]), lineno))
            elif parts[0] == "output" and len(parts) == 2:
                output = int(parts[1])
            else:
                raise ValueError(raw.strip())
        except (ValueError, AlreadyPresent) as exc:
            raise ValueError(f"line {lineno}: bad circuit line {raw.strip()!r}") from exc
    if output is not None:
        c.set_output(output)
    for a, b, lineno in wires:
        try:
            c.insert_wire(a, b)
        except (CircuitError, AlreadyPresent, KeyError) as exc:
            raise ValueError(f"line {lineno}: {type(exc).__name__}: {exc}") from exc
    return c


# ---------------------------------------------------------------------------
# random instances

def random_circuit(rng: random.Random, n_gates: int,
                   weights=(0.1, 0.25, 0.3, 0.35), density: float = 0.8) -> MonotoneCircuit:
    """Random bounded circuit on gates 0..n-1; wires respect the id order.

    The last gate is the output and is an AND or OR gate.
    """
    c = MonotoneCircuit()
    labels = [Label.ZERO, Label.ONE, Label.AND, Label.OR]
    for i in range(n_gates - 1):
        c.add_gate(rng.choices(labels, weights)[0], i)
    c.add_gate(rng.choice([Label.AND, Label.OR]), n_gates - 1)
    c.set_output(n_gates - 1)
    for b in range(1, n_gates):
        for _ in range(c.in_cap(b)):
            if rng.random() > density:
                continue
            a = rng.randrange(b)
            if c.can_insert(a, b):
                c.insert_wire(a, b)
    return c


def random_wire_op(rng: random.Random, c: MonotoneCircuit, p_delete: float = 0.5,
                   tries: int = 50) -> Optional[Tuple[str, int, int]]:
    """A legal '+'/'-' wire op keeping the id order (so no cycles arise)."""
    wires = c.wires()
    if wires and rng.random() < p_delete:
        a, b = rng.choice(wires)
        return ("-", a, b)
    n = c.size
    gates = sorted(c.labels)
    for _ in range(tries):
        a, b = sorted(rng.sample(gates, 2)) if n >= 2 else (None, None)
        if a is not None and c.can_insert(a, b):
            return ("+", a, b)
    if wires:
        a, b = rng.choice(wires)
        return ("-", a, b)
    return None


def apply_wire_op(c: MonotoneCircuit, op: Tuple[str, int, int]) -> None:
    kind, a, b = op
    if kind == "+":
        c.insert_wire(a, b)
    else:
        c.delete_wire(a, b)
