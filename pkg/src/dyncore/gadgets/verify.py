"""Exhaustive contract checks for gadget libraries.

Every gate gadget is embedded in each input context (each input driven by a
live ONE, a dead ZERO, or left unwired), once with its outputs dangling and
once with every output feeding a consumer that is live anyway. The static
oracle of the library must then mark the gadget's outputs active exactly when
the gate function of the context is 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..circuit import IN_CAP, OUT_CAP, Label, MonotoneCircuit, gate_fn
from .approx import ApproxLibrary
from .base import Builder, ContractViolation, Gadget, GadgetLibrary, compile_mcvp
from .kcore import KCoreLibrary, arrow
from .klcore import KLCoreLibrary
from .truss import TrussLibrary

DRIVERS = ("one", "zero", "none")


@dataclass
class Report:
    kind: str
    rows: List[Tuple[str, str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r[2] for r in self.rows)

    def failures(self):
        return [r for r in self.rows if not r[2]]

    def __str__(self) -> str:
        bad = self.failures()
        head = f"{self.kind}: {len(self.rows) - len(bad)}/{len(self.rows)} contexts pass"
        return "\n".join([head] + [f"  FAIL {g} [{ctx}]" for g, ctx, _ in bad])


def library(kind: str) -> GadgetLibrary:
    """Parse names like kcore3, truss4, klcore, klcore2,1, approx2."""
    if kind.startswith("kcore"):
        return KCoreLibrary(int(kind[5:] or 3))
    if kind.startswith("truss"):
        return TrussLibrary(int(kind[5:] or 4))
    if kind.startswith("approx"):
        return ApproxLibrary(int(kind[6:] or 2))
    if kind.startswith("klcore"):
        rest = kind[6:]
        if not rest:
            return KLCoreLibrary(2, 0)
        k, l = rest.split(",")
        return KLCoreLibrary(int(k), int(l))
    raise ValueError(f"unknown gadget library {kind!r}")


def _context(label: Label, drivers, attach: bool):
    c = MonotoneCircuit()
    srcs = []
    for d in drivers:
        if d == "none":
            continue
        srcs.append(c.add_gate(Label.ONE if d == "one" else Label.ZERO))
    g = c.add_gate(label)
    for s in srcs:
        c.insert_wire(s, g)
    consumers = []
    if attach:
        for _ in range(OUT_CAP[label]):
            one = c.add_gate(Label.ONE)
            cons = c.add_gate(Label.OR)
            c.insert_wire(one, cons)
            c.insert_wire(g, cons)
            consumers.append(cons)
        c.set_output(consumers[0])
    else:
        c.set_output(g)
    return c, g, consumers


def _check(lib: GadgetLibrary, art, port, want: int) -> bool:
    if want:
        return lib.port_active(lib.active_set(art.target), port)
    return lib.port_inactive(art.target, port)


def verify_gadget_library(kind, raise_on_fail: bool = True,
                          max_degree: Optional[int] = None) -> Report:
    lib = library(kind) if isinstance(kind, str) else kind
    name = kind if isinstance(kind, str) else lib.kind
    if max_degree is None and isinstance(lib, KCoreLibrary) and lib.k == 3:
        max_degree = 4
    rep = Report(name)
    for label in Label:
        n_in = IN_CAP[label]
        for drivers in itertools.product(DRIVERS, repeat=n_in):
            want = gate_fn(label, [1 if d == "one" else 0 for d in drivers if d != "none"])
            for attach in (False, True):
                c, g, consumers = _context(label, drivers, attach)
                art = compile_mcvp(c, lib)
                gd = art.gate_map[g]
                ok = all(_check(lib, art, p, want) for p in gd.outputs)
                ok = ok and _check(lib, art, gd.star, want)
                # consumers are live regardless of the gadget
                ok = ok and all(_check(lib, art, art.gate_map[x].star, 1) for x in consumers)
                if max_degree is not None:
                    ok = ok and art.target.max_degree() <= max_degree
                ctx = f"inputs={','.join(drivers) or '-'} outputs={'attached' if attach else 'free'}"
                rep.rows.append((label.value, ctx, ok))
    if isinstance(lib, KCoreLibrary):
        _verify_arrow(lib, rep, max_degree)
    if raise_on_fail and not rep.ok:
        g, ctx, _ = rep.failures()[0]
        raise ContractViolation(f"{name}: gadget {g} fails in context {ctx}")
    return rep


def _verify_arrow(lib: KCoreLibrary, rep: Report, max_degree) -> None:
    # arrow alone: output vertex in the core iff its input vertex is fed live
    for driver in DRIVERS:
        for attach in (False, True):
            t = lib.new_target()
            b = Builder(t)
            a, o, avs = arrow(b)
            gads = {-1: Gadget("ARROW", avs)}
            if driver != "none":
                src = lib.gate(Label.ONE if driver == "one" else Label.ZERO, b)
                gads[0] = src
                b.edge(src.outputs[0], a)
            if attach:
                one = lib.gate(Label.ONE, b)
                cons = lib.gate(Label.OR, b)
                gads[1], gads[2] = one, cons
                b.edge(one.outputs[0], cons.inputs[0])
                b.edge(o, cons.inputs[1])
            lib.finish(b, gads)
            active = lib.active_set(t)
            ok = (o in active) == (driver == "one") and (a in active) == (driver == "one")
            if max_degree is not None:
                ok = ok and t.max_degree() <= max_degree
            rep.rows.append(("ARROW", f"input={driver} output={'attached' if attach else 'free'}", ok))
