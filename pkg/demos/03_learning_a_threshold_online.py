"""Learning the threshold online, one observation at a time.

The Kiefer-Wolfowitz learner never sees the dynamics' parameters.  It
starts from the mean of the first ten returns and then, at every step,
nudges the threshold whenever yesterday's return lands inside a shrinking
window around it; a clamp into the observed return range keeps it from
wandering where no data ever falls.

On an AR(1) path the target is known (theta* = -mu/alpha = -0.02), so we
can watch the estimate close in on it, and compare the wealth the learned
rule would have earned against the static all-stock / all-bond portfolios
and the oracle threshold.
"""

from pathlib import Path

import numpy as np

from kwthreshold import StepSchedule, Theta, dataset_preset, kw, optimal_theta_ar1, simulate
from kwthreshold.io import write_trajectory_csv
from kwthreshold.strategy import realized_growth, wealth_path

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

preset = dataset_preset("dataset1")
path = simulate(preset.ar1(), 100_000, 20240601)
theta_star, direction = optimal_theta_ar1(preset.mu, preset.alpha)

trajectory = kw.run(path, StepSchedule(), mode="stdev5")
print("threshold estimate along the way (target -0.02):")
for t in (10, 100, 1000, 10_000, 100_000):
    print(f"  t = {t:>6d}: theta = {trajectory[t - 10]:+.5f}")

print("\nper-period log growth of fixed strategies on this path:")
candidates = {
    "all bond": Theta(path.h.max() + 1.0),
    "all stock": Theta(path.h.min() - 1.0),
    "learned theta": Theta(float(trajectory[-1])),
    "oracle theta*": Theta(theta_star, direction=direction),
}
for name, theta in candidates.items():
    g = realized_growth(path, theta)
    print(f"  {name:14s} theta={theta.theta1:+.4f}: g = {g:+.6f}")

w = wealth_path(path, candidates["learned theta"])
print(f"\nfinal log-wealth with the learned rule: {w[-1]:.1f} over {len(path):,} periods")
write_trajectory_csv(trajectory, OUT / "theta_trajectory.csv")
print(f"wrote {OUT / 'theta_trajectory.csv'} (columns t,theta1)")
