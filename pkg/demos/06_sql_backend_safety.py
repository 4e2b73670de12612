#!/usr/bin/env python3
"""Poke the embedded SQL backend: honest analytical queries work, write
attempts and runaway statements are contained."""

from pathlib import Path

from aisbench.ingest import load_bundle, subset
from aisbench.nlidb import build_schema_card, execute_sql, load_backend
from aisbench.runner import RunConfig, stage_ingest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

cfg = RunConfig.from_file(FIXTURES / "benchmark_config.json",
                          overrides={"out_dir": "runs/demo-sql"})
stage_ingest(cfg)
bundle = subset(load_bundle("runs/demo-sql/dataset"), 10, seed=cfg.seed)
backend = load_backend(bundle)

print(build_schema_card(backend).render())

good = [
    "SELECT count(DISTINCT mmsi) FROM dynamic",
    "SELECT name, max(sog) FROM dynamic JOIN static USING (mmsi) "
    "GROUP BY name ORDER BY max(sog) DESC LIMIT 3",
    "SELECT p.name, count(DISTINCT d.mmsi) AS visitors FROM ports p JOIN dynamic d "
    "ON haversine_m(p.latitude, p.longitude, d.latitude, d.longitude) < 2000 "
    "GROUP BY p.name ORDER BY visitors DESC LIMIT 3",
]
for sql in good:
    exchange = execute_sql(sql, backend)
    print(f"$ {sql}")
    print(exchange.result_rows, "\n")

bad = [
    "DROP TABLE static",
    "SELECT 1; DELETE FROM dynamic",
    "WITH RECURSIVE c(x) AS (SELECT 1 UNION ALL SELECT x + 1 FROM c) "
    "SELECT count(*) FROM c",
]
for sql in bad:
    exchange = execute_sql(sql, backend, timeout_s=0.5)
    print(f"$ {sql}")
    print(f"  -> {exchange.execution_status}: {exchange.error}")

print("\nstatic table still holds", backend.table_count("static"), "rows")
backend.close()
