"""Scoring probabilistic forecasts with the CRPS and building measures from it.

The CRPS generalizes absolute error to distributional forecasts: it is
E|X - x| - 0.5 E|X1 - X2| for draws from the forecast, reported in the same
units as the data.  Closed forms exist for point-mass and Gaussian
forecasts; sample clouds are scored directly.
"""

import math

import numpy as np

from credal import (
    Empirical,
    Gaussian,
    LossValue,
    PointMass,
    crps,
    crps_measure,
    crps_monte_carlo,
    exp_loss_score,
    min_abs_error_score,
)

x_observed = 1.2

print(f"observed outcome: {x_observed}")
for name, f in [
    ("point mass at 1.2 (perfect)", PointMass(1.2)),
    ("point mass at 3.0", PointMass(3.0)),
    ("N(1.2, 0.5) (sharp, centered)", Gaussian(1.2, 0.5)),
    ("N(1.2, 3.0) (centered, diffuse)", Gaussian(1.2, 3.0)),
    ("N(4.0, 0.5) (sharp, wrong)", Gaussian(4.0, 0.5)),
]:
    print(f"  CRPS[{name}] = {crps(f, x_observed):.4f}")
print("sharp-and-right beats diffuse beats sharp-and-wrong.")

# the closed forms are cross-checked by sampling the defining expectations
closed = crps(Gaussian(0.0, 1.0), 1.0)
est, se = crps_monte_carlo(Gaussian(0.0, 1.0), 1.0, n_draws=400_000, seed=1)
print(f"\nclosed form {closed:.5f} vs sampled {est:.5f} (se {se:.1e})")

# an empirical cloud converges to its population CRPS
rng = np.random.default_rng(0)
for m in (100, 10_000):
    cloud = Empirical(rng.normal(0.0, 1.0, m))
    print(f"empirical CRPS with {m:>6} draws: {crps(cloud, 1.0):.5f}")

# CRPS scores become additive evidential measures via a negative scale:
# lower CRPS must mean a larger score
forecasts = [Gaussian(0.0, 1.0), Gaussian(2.0, 1.0)]
measure = crps_measure(forecasts, x_observed, a=-1.0)
print("\nadditive scores at a=-1:", np.round(measure.scores, 4))

# losses become multiplicative scores through the exponential map, the only
# strictly decreasing map with f(x)f(y) = f(x+y)
losses = [LossValue(crps(f, x_observed), learning_rate=1.0) for f in forecasts]
print("exponentiated-loss scores:", np.round(exp_loss_score(losses).scores, 4))

# hypotheses that are curves: score by the best single-point fit; note the
# minimum over data points is NOT expressible as a sum of per-point losses
data = [(0.0, 0.1), (1.0, 1.1), (2.0, 1.8)]
predictions = [
    [0.0, 1.0, 2.0],   # y = x
    [1.0, 1.0, 1.0],   # y = 1
]
mae = min_abs_error_score(data, predictions, a=-1.0)
print("min-absolute-error scores for y=x and y=1:", np.round(mae.scores, 4))
