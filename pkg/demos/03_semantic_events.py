#!/usr/bin/env python3
"""Convert a ferry's day into zone-transition events and print the text
summary exactly as the semantic prompting method embeds it."""

from pathlib import Path

from aisbench.geo import load_zones
from aisbench.ingest import load_bundle
from aisbench.runner import RunConfig, stage_ingest
from aisbench.semantics import SemanticConfig, render_events, to_semantic_events

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

cfg = RunConfig.from_file(FIXTURES / "benchmark_config.json",
                          overrides={"out_dir": "runs/demo-semantic"})
stage_ingest(cfg)
bundle = load_bundle("runs/demo-semantic/dataset")

zones = tuple(load_zones(FIXTURES / "zones.csv"))
ferry = next(m for m, s in bundle.static.items()
             if "ferry" in (s.ship_type or "").lower())

for buffer in (500.0, 0.0):
    events = to_semantic_events(bundle.dynamic[ferry], SemanticConfig(zones, buffer))
    print(f"buffer {buffer:5.0f} m -> {len(events)} events")

events = to_semantic_events(bundle.dynamic[ferry], SemanticConfig(zones, 500.0))
print()
print(render_events(events, bundle.static[ferry]))
