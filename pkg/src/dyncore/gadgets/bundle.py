"""Artifact bundles on disk: ``target.edges`` plus ``manifest.json``."""
from __future__ import annotations

import json
from pathlib import Path

from ..circuit import parse_circuit
from ..graph import read_edge_list, write_edge_list
from .base import Builder, Gadget, ReductionArtifact
from .verify import library


def _lib_name(kind, params):
    if kind == "klcore":
        return f"klcore{params['k']},{params['l']}"
    return f"{kind}{params['k']}"


def _tup(x):
    if isinstance(x, list):
        return tuple(_tup(y) for y in x)
    return x


def write_bundle(art: ReductionArtifact, path) -> Path:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    write_edge_list(art.target, path / "target.edges")
    with open(path / "manifest.json", "w") as fh:
        json.dump(art.to_manifest(), fh, indent=1, sort_keys=True)
    return path


def load_bundle(path) -> ReductionArtifact:
    path = Path(path)
    with open(path / "manifest.json") as fh:
        man = json.load(fh)
    lib = library(_lib_name(man["kind"], man["params"]))
    circuit = parse_circuit(man["circuit"].splitlines())
    art = ReductionArtifact(lib, circuit)
    art.target = read_edge_list(path / "target.edges", directed=lib.directed)
    art.builder = Builder(art.target, man["next_vertex"])
    art.star = _tup(man["distinguished"])
    for g, gd in man["gate_map"].items():
        art.gate_map[int(g)] = Gadget(gd["label"], gd["vertices"], [_tup(p) for p in gd["inputs"]],
                                      [_tup(p) for p in gd["outputs"]], _tup(gd["star"]))
    for row in man["wire_map"]:
        a, b = row["wire"]
        art.wire_map[(a, b)] = [tuple(e) for e in row["edges"]]
        po, pi = row["ports"]
        art.port_of[(a, b)] = (_tup(po), _tup(pi))
    art.free_in = {int(g): [_tup(p) for p in ps] for g, ps in man["free_in"].items()}
    art.free_out = {int(g): [_tup(p) for p in ps] for g, ps in man["free_out"].items()}
    return art


# k-SAT bundles: the CNF, its staged circuit and the gate roles

def write_ksat_bundle(inst, path) -> Path:
    from ..circuit import format_circuit
    from .ksat import format_dimacs
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    (path / "instance.cnf").write_text(format_dimacs(inst.n_vars, inst.clauses))
    (path / "circuit.txt").write_text(format_circuit(inst.circuit))
    man = {"kind": "ksat", "n_vars": inst.n_vars, "delta": inst.delta, "U": inst.U,
           "rest": inst.rest, "one": inst.one, "L": inst.L, "R": inst.R, "output": inst.gstar}
    with open(path / "manifest.json", "w") as fh:
        json.dump(man, fh, indent=1, sort_keys=True)
    return path


def load_ksat_bundle(path):
    """Rebuild the instance and check it against the stored circuit."""
    from ..circuit import format_circuit
    from .ksat import KsatInstance, parse_dimacs
    path = Path(path)
    with open(path / "manifest.json") as fh:
        man = json.load(fh)
    n_vars, clauses = parse_dimacs((path / "instance.cnf").read_text().splitlines())
    inst = KsatInstance(n_vars, clauses, man["delta"])
    if format_circuit(inst.circuit) != (path / "circuit.txt").read_text():
        raise ValueError("stored circuit does not match the rebuilt instance")
    if inst.gstar != man["output"] or inst.L != man["L"] or inst.R != man["R"]:
        raise ValueError("stored gate roles do not match the rebuilt instance")
    return inst
