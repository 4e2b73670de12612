#!/usr/bin/env python3
"""Walk through data ingestion: parse the raw AIS day, resample it to the
5-minute grid, merge the emissions table, and draw nested vessel subsets."""

from pathlib import Path

from aisbench.ingest import (assemble_bundle, build_static, load_emissions,
                             load_ports, parse_raw, resample, subset, write_bundle)

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

print("Parsing the raw AIS feed...")
parsed = parse_raw(FIXTURES / "ais_raw.csv")
print(f"  kept {len(parsed.rows)} rows, dropped {parsed.dropped} invalid ones")
print(f"  distinct vessels: {parsed.vessel_count}")

print("\nResampling to one record per vessel per 5 minutes...")
dynamic = resample(parsed.rows)
print(f"  {len(parsed.rows)} raw rows -> {len(dynamic)} resampled records")

print("\nMerging static attributes with the emissions table...")
emissions = load_emissions(FIXTURES / "emissions.csv")
static = build_static(parsed.rows, emissions)
with_co2 = sum(1 for s in static if s.annual_co2 is not None)
print(f"  {len(static)} vessels, {with_co2} matched to emission figures")

ports = load_ports(FIXTURES / "ports.csv")
bundle = assemble_bundle(dynamic, static, ports)

print("\nNested subsets (same seed, growing size):")
previous = set()
for n in (5, 10, 25):
    chosen = subset(bundle, n, seed=0)
    grown = set(chosen.mmsis) - previous
    print(f"  size {n:3d}: +{len(grown)} vessels, e.g. {sorted(grown)[:3]}")
    previous = set(chosen.mmsis)

out = Path("runs/demo-ingest")
write_bundle(bundle, out)
print(f"\nNormalized CSVs written to {out}/ (dynamic.csv, static.csv, ports.csv)")
