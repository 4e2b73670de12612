#!/usr/bin/env python3
"""Ask the deterministic oracle a few of the benchmark questions directly,
over a 10-vessel subset of the shipped day."""

from pathlib import Path

from aisbench.catalog import load_catalog, probe_plan
from aisbench.ingest import load_bundle, subset
from aisbench.oracle import SegmentationConfig, answer, build_applicability
from aisbench.runner import RunConfig, stage_ingest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

cfg = RunConfig.from_file(FIXTURES / "benchmark_config.json",
                          overrides={"out_dir": "runs/demo-oracle"})
stage_ingest(cfg)
bundle = subset(load_bundle("runs/demo-oracle/dataset"), 10, seed=cfg.seed)

specs = {s.id: s for s in load_catalog()}
seg = SegmentationConfig()

plan = probe_plan(list(specs.values()), bundle, k=1, seed=cfg.seed,
                  predicates=build_applicability(seg))
by_id = {i.spec.id: i for i in plan}

for qid in ("Q4", "Q5", "Q8", "Q10", "Q12", "Q15", "Q18", "Q24", "Q26", "Q27"):
    instance = by_id[qid]
    truth = answer(instance, bundle, seg)
    print(f"{qid}: {instance.question}")
    print(f"     -> {truth.payload_json()}")
