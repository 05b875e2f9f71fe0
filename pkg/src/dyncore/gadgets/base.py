"""Shared machinery for circuit-to-graph compilers.

A gadget library turns each gate into a constant-size fragment with input
and output ports, and turns each circuit wire into a constant set of edges
between an output port and an input port. The compiled target is kept in
sync with the source circuit by replaying wire updates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple, Union

from ..circuit import Label, MonotoneCircuit
from ..graph import Digraph, Graph

EdgeOp = Tuple[str, int, int]


class ContractViolation(AssertionError):
    pass


class Builder:
    """Allocates fresh vertex ids and inserts permanent edges."""

    def __init__(self, target: Union[Graph, Digraph], start: int = 0):
        self.target = target
        self.next = start

    def vertex(self) -> int:
        v = self.next
        self.next += 1
        self.target.add_vertex(v)
        return v

    def vertices(self, k: int) -> List[int]:
        return [self.vertex() for _ in range(k)]

    def edge(self, u: int, v: int) -> None:
        self.target.insert_edge(u, v)

    def clique(self, vs) -> None:
        vs = list(vs)
        directed = isinstance(self.target, Digraph)
        for i, u in enumerate(vs):
            for w in vs[i + 1:]:
                self.target.insert_edge(u, w)
                if directed:
                    self.target.insert_edge(w, u)


@dataclass
class Gadget:
    label: str
    vertices: List[int] = field(default_factory=list)
    inputs: List[Any] = field(default_factory=list)
    outputs: List[Any] = field(default_factory=list)
    star: Any = None


class GadgetLibrary:
    """Interface every library implements."""

    kind = "abstract"
    directed = False

    def __init__(self, k: int = 3, l: int = 0):
        self.k = k
        self.l = l

    def params(self) -> Dict[str, int]:
        return {"k": self.k}

    def new_target(self):
        return Digraph() if self.directed else Graph()

    def gate(self, label: Label, b: Builder) -> Gadget:
        raise NotImplementedError

    def wire_edges(self, out_port, in_port) -> List[Tuple[int, int]]:
        raise NotImplementedError

    def finish(self, b: Builder, gadgets: Dict[int, Gadget]) -> None:
        """Global augmentation after all gadgets exist (e.g. universal vertices)."""

    # decisions on a target, via the static oracles
    def active_set(self, target):
        raise NotImplementedError

    def port_active(self, active, port) -> bool:
        raise NotImplementedError

    def port_inactive(self, target, port) -> bool:
        # for exact libraries "not active" is the same as inactive
        return not self.port_active(self.active_set(target), port)

    def decide(self, target, star) -> bool:
        return self.port_active(self.active_set(target), star)


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


class ReductionArtifact:
    """Compiled target plus everything needed to replay circuit updates."""

    def __init__(self, lib: GadgetLibrary, circuit: MonotoneCircuit):
        self.lib = lib
        self.kind = lib.kind
        self.params = lib.params()
        self.circuit = circuit
        self.target = lib.new_target()
        self.builder = Builder(self.target)
        self.gate_map: Dict[int, Gadget] = {}
        self.free_in: Dict[int, List[Any]] = {}
        self.free_out: Dict[int, List[Any]] = {}
        self.wire_map: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        self.port_of: Dict[Tuple[int, int], Tuple[Any, Any]] = {}
        self.star = None

    @property
    def distinguished(self):
        return self.star

    def _alloc(self, a: int, b: int):
        if not self.free_out[a] or not self.free_in[b]:
            raise ContractViolation(f"no free port for wire {a}->{b}")
        return self.free_out[a].pop(), self.free_in[b].pop()

    def apply(self, op: EdgeOp) -> List[EdgeOp]:
        """Apply a wire op to the circuit and its edge set to the target."""
        kind, a, b = op
        if kind == "+":
            self.circuit.insert_wire(a, b)
            po, pi = self._alloc(a, b)
            edges = self.lib.wire_edges(po, pi)
            for u, v in edges:
                self.target.insert_edge(u, v)
            self.wire_map[(a, b)] = edges
            self.port_of[(a, b)] = (po, pi)
            return [("+", u, v) for u, v in edges]
        self.circuit.delete_wire(a, b)
        edges = self.wire_map.pop((a, b))
        po, pi = self.port_of.pop((a, b))
        for u, v in edges:
            self.target.delete_edge(u, v)
        self.free_out[a].append(po)
        self.free_in[b].append(pi)
        return [("-", u, v) for u, v in edges]

    def decide(self) -> bool:
        return self.lib.decide(self.target, self.star)

    def to_manifest(self) -> Dict[str, Any]:
        from ..circuit import format_circuit
        return {
            "kind": self.kind,
            "params": self.params,
            "distinguished": _plain(self.star),
            "next_vertex": self.builder.next,
            "circuit": format_circuit(self.circuit),
            "gate_map": {str(g): {"label": gd.label, "vertices": gd.vertices,
                                  "inputs": _plain(gd.inputs), "outputs": _plain(gd.outputs),
                                  "star": _plain(gd.star)}
                         for g, gd in sorted(self.gate_map.items())},
            "wire_map": [{"wire": [a, b], "edges": _plain(es),
                          "ports": _plain(self.port_of[(a, b)])}
                         for (a, b), es in sorted(self.wire_map.items())],
            "free_in": {str(g): _plain(p) for g, p in sorted(self.free_in.items())},
            "free_out": {str(g): _plain(p) for g, p in sorted(self.free_out.items())},
        }


def compile_mcvp(c: MonotoneCircuit, lib: GadgetLibrary) -> ReductionArtifact:
    """Generic compiler: gadget per gate, wire edges per circuit wire."""
    if c.output is None:
        raise ValueError("circuit has no output gate")
    src = c.copy()
    src.incremental = False
    wires = src.wires()
    for a, b in wires:
        src.delete_wire(a, b)
    art = ReductionArtifact(lib, src)
    b = art.builder
    for g in sorted(src.labels):
        gd = lib.gate(src.labels[g], b)
        art.gate_map[g] = gd
        art.free_in[g] = list(reversed(gd.inputs))
        art.free_out[g] = list(reversed(gd.outputs))
    lib.finish(b, art.gate_map)
    art.star = art.gate_map[src.output].star
    for a, bb in sorted(wires):
        art.apply(("+", a, bb))
    return art


def replay_wire_update(art: ReductionArtifact, wire_op: EdgeOp) -> List[EdgeOp]:
    return art.apply(wire_op)
