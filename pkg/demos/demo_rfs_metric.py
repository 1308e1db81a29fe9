#!/usr/bin/env python3
"""Walk through the rater feedback score piece by piece.

Shows the speed-scaled trust regions, the in-region rule, the
exponential out-of-region penalty, and the floor of 4.
"""

import numpy as np

from bevplan.core import RaterTrajectory, Trajectory
from bevplan.metrics import lat_long_error, rfs_single, scaled_thresholds, speed_scale
from bevplan.report import format_table


def straight(speed, lateral=0.0):
    t = (np.arange(20) + 1) * 0.25
    return Trajectory(np.stack([speed * t, np.full(20, lateral)], axis=1))


print("speed scale (piecewise linear):")
rows = [{"v (m/s)": v, "scale": speed_scale(v)} for v in (0.0, 1.4, 5.0, 6.2, 11.0, 14.0)]
print(format_table(rows, ["v (m/s)", "scale"], floatfmt=".3f"))

print("trust-region extents eta_lat/eta_long by time and speed:")
rows = []
for t in (3.0, 5.0):
    for v in (0.0, 6.2, 12.0):
        lat, long = scaled_thresholds(t, v)
        rows.append({"t (s)": t, "v (m/s)": v, "eta_lat": lat, "eta_long": long})
print(format_table(rows, ["t (s)", "v (m/s)", "eta_lat", "eta_long"], floatfmt=".2f"))

rater = RaterTrajectory(straight(12.0), score=9.0, initial_speed=12.0)

print("scoring a prediction that drifts laterally off the rated line:")
rows = []
for lateral in (0.0, 0.8, 1.2, 2.0, 3.5):
    pred = straight(12.0, lateral=lateral)
    lat, long, delta = lat_long_error(pred, rater.trajectory, 3.0)
    rows.append({
        "lateral offset": lateral,
        "delta": delta,
        "rfs@3s": rfs_single(pred, [rater], 3.0),
    })
print(format_table(rows, ["lateral offset", "delta", "rfs@3s"], floatfmt=".3f"))
print("inside the 1.0 m lateral region the rater's own score (9) is returned;")
print("outside, 9 * 0.1^clamp(delta - 0.5, 0, 1) applies, floored at 4.\n")

print("a crawling rater shrinks the region to 0.5 m, exposing the decay band:")
slow = RaterTrajectory(straight(0.2), score=9.0, initial_speed=0.0)
rows = []
for lateral in (0.4, 0.6, 0.9, 1.3, 2.0):
    pred = straight(0.2, lateral=lateral)
    rows.append({"lateral offset": lateral,
                 "rfs@3s": rfs_single(pred, [slow], 3.0)})
print(format_table(rows, ["lateral offset", "rfs@3s"], floatfmt=".3f"))

print("multiple raters: the best containing region wins, otherwise the closest:")
good = RaterTrajectory(straight(12.0), 10.0, 12.0)
side = RaterTrajectory(straight(12.0, lateral=3.0), 7.0, 12.0)
for lateral in (0.0, 3.0, 6.0):
    pred = straight(12.0, lateral=lateral)
    score = rfs_single(pred, [good, side], 3.0)
    print(f"  prediction at lateral {lateral:+.1f} m -> rfs {score:.3f}")
