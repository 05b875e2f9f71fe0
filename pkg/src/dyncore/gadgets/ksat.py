"""k-SAT through staged dynamic circuit value.

Split the variables into U (the first ceil(delta*N)) and the rest. Gates:
ONE, an OR gate L_c per clause, an OR gate R_u per assignment u of U, and the
AND output g*. Wire L_c -> R_u when u falsifies every U-literal of c, and
R_u -> g* always. For each assignment v of the rest, a stage wires ONE -> L_c
for the clauses v leaves unsatisfied; then R_u = 1 iff (u, v) falsifies F,
so the circuit value is 0 exactly when some u completes v to a model.
"""
from __future__ import annotations

import itertools
import math
from typing import Iterable, List, Sequence, Tuple

from ..circuit import Label, MonotoneCircuit, expand_degrees

Clause = Tuple[int, ...]


class TooLarge(ValueError):
    pass


def parse_dimacs(lines: Iterable[str]) -> Tuple[int, List[Clause]]:
    n_vars = None
    clauses: List[Clause] = []
    cur: List[int] = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) < 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line {line!r}")
            n_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(cur))
                cur = []
            else:
                cur.append(lit)
    if cur:
        clauses.append(tuple(cur))
    if n_vars is None:
        n_vars = max((abs(l) for c in clauses for l in c), default=0)
    return n_vars, clauses


def format_dimacs(n_vars: int, clauses: Sequence[Clause]) -> str:
    out = [f"p cnf {n_vars} {len(clauses)}"]
    out += [" ".join(map(str, c)) + " 0" for c in clauses]
    return "\n".join(out) + "\n"


def brute_force_sat(n_vars: int, clauses: Sequence[Clause]) -> bool:
    for bits in itertools.product((False, True), repeat=n_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return True
    return False


def random_kcnf(rng, n_vars: int, n_clauses: int, k: int = 3) -> List[Clause]:
    out = []
    for _ in range(n_clauses):
        vs = rng.sample(range(1, n_vars + 1), min(k, n_vars))
        out.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return out


def _satisfies(assign: dict, clause: Clause) -> bool:
    # literals on variables outside ``assign`` count as unsatisfied
    return any(abs(l) in assign and assign[abs(l)] == (l > 0) for l in clause)


class KsatInstance:
    def __init__(self, n_vars: int, clauses: Sequence[Clause], delta: float = 0.25,
                 cap: int = 2 ** 16):
        if not (0 < delta < 0.5):
            raise ValueError("delta must lie in (0, 0.5)")
        self.n_vars = n_vars
        self.clauses = [tuple(c) for c in clauses]
        self.delta = delta
        nu = math.ceil(delta * n_vars)
        if 2 ** nu > cap:
            raise TooLarge(f"2^{nu} partial assignments exceed the cap {cap}")
        self.U = list(range(1, nu + 1))
        self.rest = list(range(nu + 1, n_vars + 1))
        t = MonotoneCircuit(bounded=False)
        self.one = t.add_gate(Label.ONE)
        self.L = [t.add_gate(Label.OR) for _ in self.clauses]
        self.assignments = list(itertools.product((0, 1), repeat=nu))
        self.R = [t.add_gate(Label.OR) for _ in self.assignments]
        self.gstar = t.add_gate(Label.AND)
        t.set_output(self.gstar)
        for ui, bits in enumerate(self.assignments):
            u = dict(zip(self.U, map(bool, bits)))
            for ci, c in enumerate(self.clauses):
                if not _satisfies(u, c):
                    t.insert_wire(self.L[ci], self.R[ui])
            t.insert_wire(self.R[ui], self.gstar)
        fanout = {self.one: len(self.clauses)}
        fanin = {l: 1 for l in self.L}
        self.template = t
        self.circuit, self.emap = expand_degrees(t, fanin, fanout, incremental=True)
        self.stages_run = 0

    def stage(self, bits) -> int:
        """Circuit value for one assignment of the non-U variables."""
        v = dict(zip(self.rest, map(bool, bits)))
        added = []
        for ci, c in enumerate(self.clauses):
            if not _satisfies(v, c):
                self.emap.connect(self.one, self.L[ci])
                added.append(ci)
        try:
            return self.circuit.query_value()
        finally:
            for ci in reversed(added):
                self.emap.disconnect(self.one, self.L[ci])
            self.stages_run += 1

    def solve(self) -> bool:
        for bits in itertools.product((0, 1), repeat=len(self.rest)):
            if self.stage(bits) == 0:
                return True
        return False


def compile_ksat(n_vars: int, clauses, delta: float = 0.25, cap: int = 2 ** 16) -> KsatInstance:
    return KsatInstance(n_vars, clauses, delta, cap)


def solve_ksat(inst: KsatInstance) -> bool:
    return inst.solve()
