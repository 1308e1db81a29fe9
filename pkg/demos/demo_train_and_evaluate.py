#!/usr/bin/env python3
"""Train a small planner end to end and score it.

Generates data, trains for a couple of minutes of CPU time at most,
writes a loss curve and prediction overlays, and prints the metric
report.
"""

import json
from pathlib import Path

from bevplan.decoder import DecoderConfig
from bevplan.encoder import EncoderConfig
from bevplan.metrics import evaluate_predictions
from bevplan.report import bev_overlay, line_chart
from bevplan.scenariogen import GenConfig, generate
from bevplan.training import TrainConfig, save_checkpoint, train

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

scenarios = generate(GenConfig(n=800, seed=3, d_vis=32, speed_range=(5.0, 11.0)))
cfg = TrainConfig(
    epochs=12, batch_size=128, seed=0,
    encoder=EncoderConfig(d_model=64),
    decoder=DecoderConfig(k=20),
)
print(f"training on {len(scenarios)} scenarios "
      f"(d_model={cfg.encoder.d_model}, K={cfg.decoder.k}, {cfg.epochs} epochs)")
result = train(scenarios, cfg)

for row in result.log:
    print(f"  epoch {row['epoch']:2d}  loss {row['train_loss']:8.4f}  "
          f"val ADE@3s {row['val_ade1_3s']:.3f}  val ADE@5s {row['val_ade1_5s']:.3f}")

save_checkpoint(OUT / "planner.bpc", result.checkpoint)
line_chart(OUT / "loss_curve.svg",
           [("train loss", [r["epoch"] for r in result.log],
             [r["train_loss"] for r in result.log]),
            ("val ADE@5s", [r["epoch"] for r in result.log],
             [r["val_ade1_5s"] for r in result.log])],
           "training progress", "epoch", "loss / ADE (m)")
print(f"\nwrote {OUT / 'planner.bpc'} and loss_curve.svg")

preds = result.model.predict(result.val_set)
report = evaluate_predictions(preds, result.val_set)
print("\nvalidation report:")
print(json.dumps(report, indent=2, sort_keys=True))

for i in range(3):
    svg = OUT / f"prediction_{i}.svg"
    bev_overlay(svg, result.val_set[i], preds[i])
print(f"\nwrote 3 prediction overlays to {OUT}/prediction_*.svg")
