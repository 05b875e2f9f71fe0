"""Target graph size per gadget library as circuits grow.

Each library should produce graphs whose vertex and edge counts grow
linearly in the number of gates and wires.
"""
import argparse
import random
from dataclasses import dataclass, field
from typing import List

from dyncore.circuit import random_circuit
from dyncore.gadgets import compile_mcvp, library


@dataclass
class SizeConfig:
    libraries: List[str] = field(default_factory=lambda: ["kcore3", "truss4", "klcore", "approx2"])
    gates: List[int] = field(default_factory=lambda: [25, 50, 100, 200, 400])
    seed: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--libraries", nargs="+", default=SizeConfig().libraries)
    p.add_argument("--gates", type=int, nargs="+", default=SizeConfig().gates)
    p.add_argument("--seed", type=int, default=0)
    cfg = SizeConfig(**vars(p.parse_args()))
    print("library gates wires vertices edges vertices_per_gate edges_per_gate")
    for name in cfg.libraries:
        rng = random.Random(cfg.seed)
        for n in cfg.gates:
            c = random_circuit(rng, n)
            art = compile_mcvp(c, library(name))
            t = art.target
            print(name, n, len(c.wires()), t.n, t.m, f"{t.n / n:.1f}", f"{t.m / n:.1f}")


if __name__ == "__main__":
    main()
