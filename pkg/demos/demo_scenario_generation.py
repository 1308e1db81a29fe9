#!/usr/bin/env python3
"""Generate synthetic long-tail driving scenarios and inspect them.

Writes a scenario file plus BEV sketches of one sample per category to
demos/out/.
"""

from collections import Counter
from pathlib import Path

import numpy as np

from bevplan.core import PredictionSet, save_scenarios, validate_scenario
from bevplan.report import bev_overlay
from bevplan.scenariogen import GenConfig, generate

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

cfg = GenConfig(n=300, seed=7, d_vis=32, speed_range=(4.0, 12.0))
scenarios = generate(cfg)

print(f"generated {len(scenarios)} scenarios")
print("category counts:", dict(sorted(Counter(s.category for s in scenarios).items())))
print("intent counts  :", dict(sorted(Counter(int(s.intent) for s in scenarios).items())))

bad = [s for s in scenarios if validate_scenario(s)]
print("invariant violations:", len(bad))

s0 = scenarios[0]
print("\nfirst scenario:", s0.id, f"({s0.category}, intent={s0.intent.name})")
print("  last state [x y vx vy ax ay]:", np.round(s0.history.steps[-1], 3))
print("  future endpoint:", np.round(s0.driven_future.waypoints[-1], 2))
print("  rater scores:", [r.score for r in s0.raters],
      "speeds:", [round(r.initial_speed, 2) for r in s0.raters])

path = OUT / "scenarios.jsonl"
save_scenarios(path, scenarios)
print(f"\nwrote {path} ({path.stat().st_size // 1024} KiB)")

# sketch one sample per category: the driven future rendered as a
# single-mode prediction so the rater trajectories show alongside it
seen = set()
for s in scenarios:
    if s.category in seen:
        continue
    seen.add(s.category)
    svg = OUT / f"scenario_{s.category}.svg"
    bev_overlay(svg, s, PredictionSet((s.driven_future,), [1.0]),
                title=f"{s.category} (intent {s.intent.name})")
    print("sketched", svg.name)
