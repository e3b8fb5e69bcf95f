"""A complete one-shot round through the staged pipeline, then the report tables.

Uses configs/quick.yaml (two clients, 8x8 images) and writes to runs/demo.
The same thing from the shell:

    flmg run-experiment --config configs/quick.yaml --out runs/demo
    flmg report --out runs/demo
"""
from pathlib import Path

from flmg import config, experiment, report

root = Path(__file__).resolve().parents[1]
cfg = config.with_overrides(config.load_config(root / "configs" / "quick.yaml"), out=str(root / "runs" / "demo"))

# stages can also be run one by one; each reads the previous one's files
for stage in experiment.STAGES:
    experiment.run_experiment(cfg, (stage,))
    print(f"finished stage {stage}")

print()
print(report.emit_report(cfg.out))
