"""Timing sweep for one bench subject; writes a text table and a JSON file.

    python3 scripts/bench_sweep.py twocore --min-exp 10 --max-exp 14
"""
import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from dyncore.bench import SUBJECTS, BenchConfig, format_rows, run_bench


@dataclass
class SweepConfig:
    subject: str = "twocore"
    min_exp: int = 10
    max_exp: int = 14
    density: float = 4.0
    updates: int = 2000
    queries: int = 2000
    reps: int = 5
    seed: int = 0
    churn: float = 0.0
    out_dir: str = "results"

    def bench(self) -> BenchConfig:
        return BenchConfig(self.subject, [2 ** e for e in range(self.min_exp, self.max_exp + 1)],
                           self.density, self.updates, self.queries, self.reps, seed=self.seed,
                           churn=self.churn or None)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("subject", choices=SUBJECTS)
    for f, d in asdict(SweepConfig()).items():
        if f != "subject":
            p.add_argument("--" + f.replace("_", "-"), type=type(d), default=d)
    cfg = SweepConfig(**vars(p.parse_args()))
    rows = run_bench(cfg.bench())
    text = format_rows(rows)
    print(text, end="")
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"bench_{cfg.subject}.json"
    path.write_text(json.dumps({"config": asdict(cfg), "rows": [r.as_dict() for r in rows]}, indent=1))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
