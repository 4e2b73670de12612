#!/usr/bin/env python3
"""Show the top-down time-ratio simplifier at work: how many samples
survive at different tolerances, and the worst synchronized deviation of
everything that was removed."""

from pathlib import Path

from aisbench.compress import CompressionConfig, synchronized_deviation, tdtr_compress
from aisbench.geo import trajectory_length
from aisbench.ingest import load_bundle
from aisbench.runner import RunConfig, stage_ingest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

cfg = RunConfig.from_file(FIXTURES / "benchmark_config.json",
                          overrides={"out_dir": "runs/demo-compress"})
stage_ingest(cfg)
bundle = load_bundle("runs/demo-compress/dataset")

# pick the three vessels that covered the most ground
busiest = sorted(bundle.dynamic.values(), key=trajectory_length, reverse=True)[:3]

for t in busiest:
    name = bundle.static[t.mmsi].name or t.mmsi
    print(f"\n{name}: {len(t)} samples, {trajectory_length(t) / 1000:.1f} km traveled")
    for epsilon in (50.0, 200.0, 1000.0):
        out = tdtr_compress(t, CompressionConfig(epsilon=epsilon))
        kept = {int(m) for m in out.minutes}
        worst = 0.0
        records = t.records()
        survivors = out.records()
        for i, rec in enumerate(records):
            if rec.minute in kept:
                continue
            a = max((s for s in survivors if s.minute < rec.minute), key=lambda s: s.minute)
            b = min((s for s in survivors if s.minute > rec.minute), key=lambda s: s.minute)
            worst = max(worst, synchronized_deviation(rec, a, b))
        print(f"  epsilon {epsilon:6.0f} m -> {len(out):4d} samples "
              f"({len(out) / len(t):5.1%}), worst removed-sample deviation {worst:6.1f} m")
