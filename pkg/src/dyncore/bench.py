"""Timing harness for the dynamic structures and the maintenance baseline.

Each measurement runs a warm-up, then repeats the timed phase and reports
the mean, median and 90th percentile of the per-repetition means. Timings are
wall-clock nanoseconds with the cyclic garbage collector paused.
"""
from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .dynforest import HdtConnectivity
from .graph import Graph
from .maint import MaintainedCoreState, counterexample_instance, fcm_apply
from .twocore import TwoCoreIndex

SUBJECTS = ("twocore", "hdt", "fcm-baseline", "counterexample")


@dataclass
class BenchConfig:
    subject: str = "twocore"
    sizes: Sequence[int] = (2 ** 10, 2 ** 11, 2 ** 12)
    density: float = 4.0
    updates: int = 2000
    queries: int = 2000
    reps: int = 5
    warmup: int = 200
    seed: int = 0
    # if set, updates per repetition = churn * m, so every size sees the same
    # relative turnover of its edge set
    churn: Optional[float] = None

    def updates_for(self, m: int) -> int:
        return max(2, int(self.churn * m)) if self.churn else self.updates


@dataclass
class BenchRow:
    n: int
    m: int
    p_ns: int
    u_mean_ns: float
    u_median_ns: float
    u_p90_ns: float
    q_mean_ns: float = 0.0
    q_median_ns: float = 0.0
    affected: int = 0
    u_growth: Optional[float] = None
    q_growth: Optional[float] = None
    extra: Dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


def _random_edges(rng: random.Random, n: int, m: int) -> Graph:
    g = Graph(vertices=range(n))
    m = min(m, n * (n - 1) // 2)
    while g.m < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and not g.has_edge(u, v):
            g.insert_edge(u, v)
    return g


def update_stream(rng: random.Random, g: Graph, count: int) -> List[Tuple[str, int, int]]:
    """Alternating deletes of random present edges and inserts of random
    absent pairs, so the edge count stays put. ``g`` is updated in place."""
    n = g.n
    edges = list(g.edges())
    pos = {e: i for i, e in enumerate(edges)}
    ops = []
    for i in range(count):
        if i % 2 == 0 and edges:
            j = rng.randrange(len(edges))
            e = edges[j]
            last = edges.pop()
            if j < len(edges):
                edges[j] = last
                pos[last] = j
            del pos[e]
            g.delete_edge(*e)
            ops.append(("-",) + e)
        else:
            while True:
                u, v = rng.randrange(n), rng.randrange(n)
                if u != v and not g.has_edge(u, v):
                    break
            e = (min(u, v), max(u, v))
            g.insert_edge(*e)
            pos[e] = len(edges)
            edges.append(e)
            ops.append(("+",) + e)
    return ops


def _stats(samples: List[float]) -> Tuple[float, float, float]:
    s = sorted(samples)
    return statistics.fmean(s), statistics.median(s), s[min(len(s) - 1, int(0.9 * len(s)))]


def _time_ops(fn: Callable, args: Sequence) -> float:
    # like timeit, keep the cyclic collector out of the timed region; its
    # pauses grow with the heap and would masquerade as per-op cost
    was = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        for a in args:
            fn(*a)
        return (time.perf_counter_ns() - t0) / max(1, len(args))
    finally:
        if was:
            gc.enable()


def _dynamic(cfg: BenchConfig, n: int, make, update, query) -> BenchRow:
    rng = random.Random(cfg.seed * 1_000_003 + n)
    g = _random_edges(rng, n, int(cfg.density * n))
    m = g.m
    t0 = time.perf_counter_ns()
    ds = make(g, n)
    p = time.perf_counter_ns() - t0
    shadow = g.copy()
    apply = lambda k, u, v: update(ds, k, u, v)
    _time_ops(apply, update_stream(rng, shadow, cfg.warmup))
    u_means, q_means = [], []
    for _ in range(cfg.reps):
        u_means.append(_time_ops(apply, update_stream(rng, shadow, cfg.updates_for(m))))
        qs = [(rng.randrange(n), rng.randrange(n)) for _ in range(cfg.queries)]
        q_means.append(_time_ops(lambda a, b: query(ds, a, b), qs))
    um, umed, up90 = _stats(u_means)
    qm, qmed, _ = _stats(q_means)
    return BenchRow(n, m, p, um, umed, up90, qm, qmed)


def _twocore_update(ix, k, u, v):
    (ix.insert_edge if k == "+" else ix.delete_edge)(u, v)


def _hdt_update(h, k, u, v):
    (h.insert_edge if k == "+" else h.delete_edge)(u, v)


def bench_twocore(cfg: BenchConfig, n: int) -> BenchRow:
    return _dynamic(cfg, n, lambda g, n: TwoCoreIndex.build(g, n), _twocore_update,
                    lambda ix, a, b: ix.is_in_2core(a))


def _hdt_build(g: Graph, n: int) -> HdtConnectivity:
    h = HdtConnectivity(n)
    for u, v in g.edges():
        h.insert_edge(u, v)
    return h


def bench_hdt(cfg: BenchConfig, n: int) -> BenchRow:
    return _dynamic(cfg, n, _hdt_build, _hdt_update, lambda h, a, b: h.connected(a, b))


def bench_fcm_baseline(cfg: BenchConfig, n: int) -> BenchRow:
    rng = random.Random(cfg.seed * 1_000_003 + n)
    g = _random_edges(rng, n, int(cfg.density * n))
    t0 = time.perf_counter_ns()
    state = MaintainedCoreState(g)
    p = time.perf_counter_ns() - t0
    shadow = g.copy()
    times, sizes = [], []
    for _ in range(cfg.reps):
        ops = update_stream(rng, shadow, max(2, cfg.updates // 10))
        reps = [fcm_apply(state, op, ds=()) for op in ops]
        times.append(statistics.fmean(r.time_ns for r in reps))
        sizes.extend(len(r.affected) for r in reps)
    um, umed, up90 = _stats(times)
    return BenchRow(n, g.m, p, um, umed, up90, affected=max(sizes))


def counterexample_pair(n: int, reps: int = 5) -> Tuple[float, int, int]:
    """Median time of the e1/e2 pair under the baseline, |V*| over the pair,
    and the number of core values it changed."""
    g, e1, e2 = counterexample_instance(n)
    state = MaintainedCoreState(g)
    times, affected, changed = [], set(), 0
    for r in range(reps + 1):
        a = fcm_apply(state, ("-",) + e1, ds=())
        b = fcm_apply(state, ("+",) + e2, ds=())
        affected = a.affected | b.affected
        changed = len(a.changed | b.changed)
        if r:
            times.append(a.time_ns + b.time_ns)
        # undo outside the timed region
        fcm_apply(state, ("-",) + e2, ds=())
        fcm_apply(state, ("+",) + e1, ds=())
    return statistics.median(times), len(affected), changed


def bench_counterexample(cfg: BenchConfig, n: int) -> BenchRow:
    t, aff, changed = counterexample_pair(n, cfg.reps)
    return BenchRow(n, n + 3, 0, t, t, t, affected=aff, extra={"changed": changed})


RUNNERS = {
    "twocore": bench_twocore,
    "hdt": bench_hdt,
    "fcm-baseline": bench_fcm_baseline,
    "counterexample": bench_counterexample,
}


def run_bench(cfg: BenchConfig) -> List[BenchRow]:
    if cfg.subject not in RUNNERS:
        raise ValueError(f"unknown bench subject {cfg.subject!r}")
    rows: List[BenchRow] = []
    for n in cfg.sizes:
        row = RUNNERS[cfg.subject](cfg, n)
        if rows:
            prev = rows[-1]
            # medians of the per-repetition means resist one-off stalls
            if prev.u_median_ns:
                row.u_growth = row.u_median_ns / prev.u_median_ns
            if prev.q_median_ns:
                row.q_growth = row.q_median_ns / prev.q_median_ns
        rows.append(row)
    return rows


COLUMNS = ("n", "m", "p_ns", "u_mean_ns", "u_median_ns", "u_p90_ns", "q_mean_ns",
           "q_median_ns", "affected", "u_growth", "q_growth")


def format_rows(rows: List[BenchRow]) -> str:
    def cell(x):
        if x is None:
            return "-"
        if isinstance(x, float):
            return f"{x:.3f}" if x < 100 else f"{x:.0f}"
        return str(x)
    out = [" ".join(COLUMNS)]
    for r in rows:
        d = r.as_dict()
        out.append(" ".join(cell(d[c]) for c in COLUMNS))
    return "\n".join(out) + "\n"
