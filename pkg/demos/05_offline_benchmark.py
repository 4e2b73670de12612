#!/usr/bin/env python3
"""Run the complete benchmark offline against the shipped response archive
and print the headline score table: four methods across six dataset sizes."""

import time
from pathlib import Path

from aisbench.runner import (RunConfig, stage_ground_truth, stage_ingest,
                             stage_report, stage_run, stage_score)

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

cfg = RunConfig.from_file(FIXTURES / "benchmark_config.json",
                          overrides={"out_dir": "runs/demo-benchmark"})

started = time.monotonic()
for stage in (stage_ingest, stage_ground_truth, stage_run, stage_score, stage_report):
    print(f"running {stage.__name__}...")
    stage(cfg)
print(f"finished in {time.monotonic() - started:.0f}s\n")

table = {}
for line in Path("runs/demo-benchmark/report/all.csv").read_text().splitlines()[1:]:
    size, _, score, model = line.split(",")
    table.setdefault(model, {})[int(size)] = float(score)

sizes = sorted(next(iter(table.values())))
print("mean score over the 27 queries")
print("method      " + "".join(f"  n={n:<4d}" for n in sizes))
for model in ("Raw", "Compressed", "Semantic", "PostGIS"):
    row = "".join(f"  {table[model][n]:.3f} " for n in sizes)
    print(f"{model:<12s}{row}")
print("\nPer-category tables and per-query radar data are in "
      "runs/demo-benchmark/report/")
