"""Command-line front end.

Subcommands: core, truss, klcore, twocore, reduce, verify, bench. Global
flags ``--seed``, ``--oracle`` and ``--format`` may appear before or after
the subcommand.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .graph import (
    Graph, GraphError, kl_core, parse_edge_list, static_core_decomposition,
    static_truss_decomposition,
)

# ---------------------------------------------------------------------------
# trace files

TRACE_OPS = {
    "twocore": {"+": 2, "-": 2, "?": 1},
    "hdt": {"+": 2, "-": 2, "?e": 2},
    "circuit": {"+w": 2, "-w": 2, "?": 0},
}


class TraceError(ValueError):
    pass


@dataclass
class Trace:
    kind: str
    n: int
    ops: List[Tuple] = field(default_factory=list)
    lines: List[int] = field(default_factory=list)


def parse_trace(lines: Iterable[str]) -> Trace:
    tr = None
    for no, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "@":
            if tr is not None or len(parts) != 3 or parts[1] not in TRACE_OPS:
                raise TraceError(f"line {no}: bad header {line!r}")
            try:
                tr = Trace(parts[1], int(parts[2]))
            except ValueError:
                raise TraceError(f"line {no}: bad header {line!r}") from None
            continue
        if tr is None:
            raise TraceError(f"line {no}: missing '@ <kind> <n>' header")
        arity = TRACE_OPS[tr.kind].get(parts[0])
        if arity is None or len(parts) != arity + 1:
            raise TraceError(f"line {no}: illegal op {line!r} for a {tr.kind} trace")
        try:
            args = tuple(int(x) for x in parts[1:])
        except ValueError:
            raise TraceError(f"line {no}: non-integer argument in {line!r}") from None
        if any(not (0 <= x < tr.n) for x in args):
            raise TraceError(f"line {no}: argument out of range in {line!r}")
        tr.ops.append((parts[0],) + args)
        tr.lines.append(no)
    if tr is None:
        raise TraceError("empty trace")
    return tr


def format_trace(tr: Trace) -> str:
    out = [f"@ {tr.kind} {tr.n}"]
    out += [" ".join(str(x) for x in op) for op in tr.ops]
    return "\n".join(out) + "\n"


def replay_twocore(tr: Trace, oracle: bool = False) -> List[int]:
    """Answers (0/1) to every ``?`` op. In oracle mode the answers come from
    a fresh static decomposition per query."""
    from .twocore import TwoCoreIndex
    if tr.kind != "twocore":
        raise TraceError(f"expected a twocore trace, got {tr.kind}")
    g = Graph(vertices=range(tr.n))
    ix = None if oracle else TwoCoreIndex(tr.n)
    out = []
    for op, no in zip(tr.ops, tr.lines):
        try:
            if op[0] == "?":
                if oracle:
                    out.append(int(static_core_decomposition(g)[op[1]] >= 2))
                else:
                    out.append(int(ix.is_in_2core(op[1])))
                continue
            (g.insert_edge if op[0] == "+" else g.delete_edge)(op[1], op[2])
            if ix is not None:
                (ix.insert_edge if op[0] == "+" else ix.delete_edge)(op[1], op[2])
        except GraphError as e:
            raise TraceError(f"line {no}: {type(e).__name__} for {op}") from None
    return out


def replay_hdt(tr: Trace, oracle: bool = False) -> List[int]:
    from .dynforest import HdtConnectivity
    from .graph import bfs_components
    g = Graph(vertices=range(tr.n))
    h = HdtConnectivity(tr.n)
    out = []
    for op, no in zip(tr.ops, tr.lines):
        try:
            if op[0] == "?e":
                if oracle:
                    comp = bfs_components(g)
                    out.append(int(comp[op[1]] == comp[op[2]]))
                else:
                    out.append(int(h.connected(op[1], op[2])))
                continue
            (g.insert_edge if op[0] == "+" else g.delete_edge)(op[1], op[2])
            (h.insert_edge if op[0] == "+" else h.delete_edge)(op[1], op[2])
        except GraphError as e:
            raise TraceError(f"line {no}: {type(e).__name__} for {op}") from None
    return out


def replay_circuit(c, tr: Trace, oracle: bool = False) -> List[int]:
    from .circuit import CircuitError, oracle_evaluate
    out = []
    for op, no in zip(tr.ops, tr.lines):
        try:
            if op[0] == "?":
                out.append(int(oracle_evaluate(c)[c.output]) if oracle else c.query_value())
            elif op[0] == "+w":
                c.insert_wire(op[1], op[2])
            else:
                c.delete_wire(op[1], op[2])
        except (CircuitError, KeyError) as e:
            raise TraceError(f"line {no}: {type(e).__name__} for {op}") from None
    return out


# ---------------------------------------------------------------------------
# random trace generators shared by verify suites

def random_twocore_trace(rng: random.Random, n: int, ops: int) -> Trace:
    tr = Trace("twocore", n)
    g = Graph(vertices=range(n))
    target = rng.choice([n // 2, n, 2 * n])
    for _ in range(ops):
        r = rng.random()
        if r < 0.3:
            tr.ops.append(("?", rng.randrange(n)))
            continue
        if g.m < target and rng.random() < 0.7 or g.m == 0:
            u, v = rng.sample(range(n), 2)
            if g.has_edge(u, v):
                continue
            g.insert_edge(u, v)
            tr.ops.append(("+", u, v))
        else:
            u, v = rng.choice(list(g.edges()))
            g.delete_edge(u, v)
            tr.ops.append(("-", u, v))
    tr.lines = list(range(2, len(tr.ops) + 2))
    return tr


def random_hdt_trace(rng: random.Random, n: int, ops: int) -> Trace:
    tr = random_twocore_trace(rng, n, ops)
    tr.kind = "hdt"
    tr.ops = [("?e", op[1], rng.randrange(n)) if op[0] == "?" else op for op in tr.ops]
    return tr


# ---------------------------------------------------------------------------
# verify suites: each returns None on success or (message, reproducer text)

Failure = Optional[Tuple[str, str]]


def _suite_gadgets(kind: str) -> Callable[[random.Random, int], Failure]:
    def run(rng, trials):
        from .gadgets import verify_gadget_library
        rep = verify_gadget_library(kind, raise_on_fail=False)
        if rep.ok:
            return None
        return str(rep), str(rep)
    return run


def _suite_twocore(rng, trials) -> Failure:
    for _ in range(trials):
        tr = random_twocore_trace(rng, rng.randrange(4, 60), 400)
        got = replay_twocore(tr)
        want = replay_twocore(tr, oracle=True)
        if got != want:
            k = next(i for i, (a, b) in enumerate(zip(got, want)) if a != b)
            q = [i for i, op in enumerate(tr.ops) if op[0] == "?"][k]
            tr.ops = tr.ops[:q + 1]
            return f"twocore answer {k} differs from the static oracle", format_trace(tr)
    return None


def _suite_hdt(rng, trials) -> Failure:
    for _ in range(trials):
        tr = random_hdt_trace(rng, rng.randrange(4, 60), 400)
        if replay_hdt(tr) != replay_hdt(tr, oracle=True):
            return "hdt connectivity differs from BFS", format_trace(tr)
    return None


def _suite_circuit(rng, trials) -> Failure:
    from .circuit import format_circuit, random_circuit, random_wire_op
    for _ in range(trials):
        c = random_circuit(rng, rng.randrange(2, 60))
        c.incremental = True
        text = format_circuit(c)
        tr = Trace("circuit", c.size)
        shadow = c.copy()
        for _ in range(100):
            op = random_wire_op(rng, shadow)
            if op is not None:
                (shadow.insert_wire if op[0] == "+" else shadow.delete_wire)(op[1], op[2])
                tr.ops.append(("+w" if op[0] == "+" else "-w", op[1], op[2]))
            tr.ops.append(("?",))
        tr.lines = list(range(len(tr.ops)))
        if replay_circuit(c, tr) != replay_circuit(_reparse(text), tr, oracle=True):
            return "incremental circuit value differs from recursion", text + format_trace(tr)
    return None


def _reparse(text: str):
    from .circuit import parse_circuit
    return parse_circuit(text.splitlines())


def _suite_reduce(kind: str) -> Callable[[random.Random, int], Failure]:
    def run(rng, trials):
        from .circuit import format_circuit, random_circuit, random_wire_op
        from .gadgets import compile_mcvp, library
        lib = library(kind)
        for _ in range(trials):
            c = random_circuit(rng, rng.randrange(2, 40))
            text = format_circuit(c)
            art = compile_mcvp(c, lib)
            tr = Trace("circuit", c.size)
            for _ in range(20):
                val = art.circuit.evaluate().value[art.circuit.output]
                if int(art.decide()) != val:
                    return f"{kind}: membership differs from circuit value", text + format_trace(tr)
                op = random_wire_op(rng, art.circuit)
                if op is not None:
                    art.apply(op)
                    tr.ops.append(("+w" if op[0] == "+" else "-w", op[1], op[2]))
        return None
    return run


def _suite_dynxor(rng, trials) -> Failure:
    from .gadgets.dynxor import DynXorInstance
    for _ in range(trials):
        n = rng.randrange(1, 64)
        x = [rng.randrange(2) for _ in range(n)]
        inst = DynXorInstance(x)
        log = ["".join(map(str, x))]
        for _ in range(200):
            i = rng.randrange(1, n + 1)
            if rng.random() < 0.5:
                b = rng.randrange(2)
                inst.update(i, b)
                x[i - 1] = b
                log.append(f"u {i} {b}")
            else:
                want = sum(x[:i]) % 2
                log.append(f"q {i}")
                if inst.query(i) != want:
                    return f"prefix xor at {i} wrong", "\n".join(log) + "\n"
    return None


def _suite_oumv(rng, trials) -> Failure:
    from .gadgets.oumv import OuMvInstance, direct_uMv, format_matrix
    for _ in range(trials):
        n = rng.randrange(1, 9)
        M = [[rng.randrange(2) for _ in range(n)] for _ in range(n)]
        for mode in ("dynamic", "incremental", "decremental"):
            inst = OuMvInstance(M, mode)
            for _ in range(10):
                u = [rng.randrange(2) for _ in range(n)]
                v = [rng.randrange(2) for _ in range(n)]
                if inst.query(u, v) != direct_uMv(M, u, v):
                    return f"oumv {mode} wrong", format_matrix(M) + f"u {u}\nv {v}\n"
    return None


def _suite_ksat(rng, trials) -> Failure:
    from .gadgets.ksat import KsatInstance, brute_force_sat, format_dimacs, random_kcnf
    for _ in range(trials):
        n = rng.randrange(3, 9)
        cl = random_kcnf(rng, n, rng.randrange(1, 4 * n))
        if KsatInstance(n, cl).solve() != brute_force_sat(n, cl):
            return "staged k-SAT differs from brute force", format_dimacs(n, cl)
    return None


def _suite_counterexample(rng, trials) -> Failure:
    from .maint import counterexample_instance
    for n in (8, 9, 10, 33, 100):
        try:
            counterexample_instance(n)
        except AssertionError as e:
            return f"n={n}: {e}", f"{n}\n"
    return None


SUITES: Dict[str, Callable[[random.Random, int], Failure]] = {
    "gadgets-kcore3": _suite_gadgets("kcore3"),
    "gadgets-truss4": _suite_gadgets("truss4"),
    "gadgets-klcore": _suite_gadgets("klcore"),
    "gadgets-approx2": _suite_gadgets("approx2"),
    "gadgets-approx3": _suite_gadgets("approx3"),
    "twocore-fuzz": _suite_twocore,
    "hdt-fuzz": _suite_hdt,
    "circuit-fuzz": _suite_circuit,
    "reduce-kcore3": _suite_reduce("kcore3"),
    "reduce-truss4": _suite_reduce("truss4"),
    "reduce-klcore": _suite_reduce("klcore"),
    "reduce-approx2": _suite_reduce("approx2"),
    "dynxor-e2e": _suite_dynxor,
    "oumv-e2e": _suite_oumv,
    "ksat-e2e": _suite_ksat,
    "counterexample": _suite_counterexample,
}


# ---------------------------------------------------------------------------
# commands

def _read_lines(path: str) -> List[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    return Path(path).read_text().splitlines()


def _emit(args, rows: List[Sequence], as_json) -> None:
    if args.format == "json":
        print(json.dumps(as_json))
    else:
        for r in rows:
            print(" ".join(str(x) for x in r))


def cmd_core(args) -> int:
    g = parse_edge_list(_read_lines(args.graph))
    core = static_core_decomposition(g)
    _emit(args, [(v, core[v]) for v in sorted(core)], {str(v): core[v] for v in sorted(core)})
    return 0


def cmd_truss(args) -> int:
    g = parse_edge_list(_read_lines(args.graph))
    tr = static_truss_decomposition(g)
    rows = [(u, v, tr[(u, v)]) for u, v in sorted(tr)]
    _emit(args, rows, [list(r) for r in rows])
    return 0


def cmd_klcore(args) -> int:
    g = parse_edge_list(_read_lines(args.graph), directed=True)
    members = sorted(kl_core(g, args.k, args.l))
    _emit(args, [(v,) for v in members], members)
    return 0


def cmd_twocore(args) -> int:
    tr = parse_trace(_read_lines(args.trace))
    answers = replay_twocore(tr, oracle=args.oracle)
    _emit(args, [(a,) for a in answers], answers)
    return 0


def cmd_reduce(args) -> int:
    from .circuit import format_circuit, parse_circuit
    out = Path(args.out)
    lines = _read_lines(args.source)
    if args.kind == "circuit":
        from .gadgets import compile_mcvp, library
        from .gadgets.bundle import write_bundle
        if args.target == "klcore":
            name = f"klcore{args.k or 2},{args.l}"
        else:
            name = args.target + ("" if args.k is None else str(args.k))
        art = compile_mcvp(parse_circuit(lines), library(name))
        write_bundle(art, out)
        summary = {"kind": art.kind, "vertices": art.target.n, "edges": art.target.m,
                   "distinguished": art.star, "decision": int(art.decide())}
    elif args.kind == "oumv":
        from .gadgets.oumv import OuMvInstance, parse_matrix
        inst = OuMvInstance(parse_matrix(lines), args.mode)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(format_circuit(inst.circuit))
        summary = {"kind": "oumv", "gates": inst.circuit.size, "output": inst.gstar}
    else:
        from .gadgets.bundle import write_ksat_bundle
        from .gadgets.ksat import KsatInstance, parse_dimacs
        n_vars, clauses = parse_dimacs(lines)
        inst = KsatInstance(n_vars, clauses, args.delta)
        write_ksat_bundle(inst, out)
        summary = {"kind": "ksat", "gates": inst.circuit.size, "partial_assignments": len(inst.R)}
    _emit(args, [(k, v) for k, v in summary.items()], summary)
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    status = 0
    results = {}
    for name in names:
        if name not in SUITES:
            print(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}", file=sys.stderr)
            return 2
        fail = SUITES[name](random.Random(args.seed), args.trials)
        results[name] = "pass" if fail is None else "fail"
        if fail is not None:
            msg, repro = fail
            path = Path(args.out) / f"{name}.repro"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(repro)
            print(f"FAIL {name}: {msg} (reproducer: {path})", file=sys.stderr)
            status = 1
            if args.suite != "all":
                break
    _emit(args, [(v.upper(), k) for k, v in results.items()], results)
    return status


def cmd_bench(args) -> int:
    from .bench import BenchConfig, format_rows, run_bench
    cfg = BenchConfig(subject=args.subject, sizes=args.sizes or BenchConfig.sizes,
                      density=args.density, updates=args.updates, queries=args.queries,
                      reps=args.reps, seed=args.seed, churn=args.churn)
    rows = run_bench(cfg)
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in rows]))
    else:
        sys.stdout.write(format_rows(rows))
    return 0


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--oracle", action="store_true", default=argparse.SUPPRESS,
                   help="answer queries by static recomputation")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = argparse.ArgumentParser(prog="dyncore", parents=[common],
                                description="Core decompositions, dynamic 2-core and reductions.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("core", cmd_core, "core value per vertex"),
                               ("truss", cmd_truss, "trussness per edge")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("graph", help="edge-list file or - for stdin")
        s.set_defaults(func=fn)

    s = sub.add_parser("klcore", parents=[common], help="(k,l)-core of a digraph")
    s.add_argument("graph")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-l", type=int, required=True)
    s.set_defaults(func=cmd_klcore)

    s = sub.add_parser("twocore", parents=[common], help="replay a twocore trace")
    s.add_argument("trace")
    s.set_defaults(func=cmd_twocore)

    s = sub.add_parser("reduce", parents=[common], help="compile a source instance")
    s.add_argument("source")
    s.add_argument("--kind", choices=("circuit", "oumv", "cnf"), default="circuit")
    s.add_argument("--target", choices=("kcore", "truss", "klcore", "approx"), default="kcore")
    s.add_argument("-k", type=int, default=None)
    s.add_argument("-l", type=int, default=0)
    s.add_argument("--mode", choices=("dynamic", "incremental", "decremental"), default="dynamic")
    s.add_argument("--delta", type=float, default=0.25)
    s.add_argument("-o", "--out", required=True, help="bundle directory or circuit file")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help="suite name or 'all'")
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--out", default="repro", help="directory for reproducers")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", parents=[common], help="timing sweep")
    s.add_argument("subject", choices=("twocore", "hdt", "fcm-baseline", "counterexample"))
    s.add_argument("--sizes", type=int, nargs="+")
    s.add_argument("--density", type=float, default=4.0)
    s.add_argument("--updates", type=int, default=2000)
    s.add_argument("--queries", type=int, default=2000)
    s.add_argument("--reps", type=int, default=5)
    s.add_argument("--churn", type=float, default=None,
                   help="updates per repetition as a fraction of m (overrides --updates)")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("seed", 0), ("oracle", False), ("format", "text")):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (TraceError, GraphError, ValueError, OSError) as e:
        print(f"dyncore: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
