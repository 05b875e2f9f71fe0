"""Baseline update time on the counterexample family versus n.

Reports, per n, the affected-set size of the e1/e2 pair, the number of core
values it changed, the median pair time, and a least-squares log-log slope.
"""
import argparse
import math
from dataclasses import dataclass, field
from typing import List

from dyncore.bench import counterexample_pair


@dataclass
class CounterexampleConfig:
    sizes: List[int] = field(default_factory=lambda: [10, 100, 1000, 10000, 100000])
    reps: int = 5


def slope(xs, ys):
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    num = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    den = sum((a - mx) ** 2 for a in lx)
    return num / den


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=CounterexampleConfig().sizes)
    p.add_argument("--reps", type=int, default=5)
    cfg = CounterexampleConfig(**vars(p.parse_args()))
    print("n |V*| changed pair_time_ns")
    times = []
    for n in cfg.sizes:
        t, aff, changed = counterexample_pair(n, cfg.reps)
        times.append(t)
        print(n, aff, changed, int(t))
    big = [(n, t) for n, t in zip(cfg.sizes, times) if n >= 1000]
    if len(big) >= 2:
        print(f"log-log slope over n >= 1000: {slope(*zip(*big)):.2f}")


if __name__ == "__main__":
    main()
