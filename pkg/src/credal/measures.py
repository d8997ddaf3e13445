"""Evidential measures: scores for how strongly evidence favors a hypothesis.

A score vector carries one evidential score per hypothesis together with the
combination mode it is meant for: multiplicative scores feed the ratio-form
update, additive scores feed the add-and-renormalize update.  Concrete
measures provided here: raw likelihood wrappers, exponential-loss scores,
the continuous ranked probability score (CRPS) of a probabilistic forecast,
and a minimum-absolute-error measure for curve-fitting hypotheses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

import numpy as np

_SQRT_2 = math.sqrt(2.0)
_SQRT_PI = math.sqrt(math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


class Mode(Enum):
    """How a score vector combines with a prior."""

    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


class ModeMismatchError(ValueError):
    """A score vector's mode does not match the requested operation."""


class ScoreVector:
    """One evidential score per hypothesis, tagged with its combination mode.

    Multiplicative scores must be strictly positive; additive scores may take
    any finite value.  Immutable after construction.
    """

    __slots__ = ("_scores", "_mode")

    def __init__(self, scores, mode: Mode):
        s = np.array(scores, dtype=float)
        if s.ndim != 1 or s.size == 0:
            raise ValueError("score vector needs a non-empty 1-d vector")
        if not np.all(np.isfinite(s)):
            raise ValueError("scores must be finite")
        if not isinstance(mode, Mode):
            raise TypeError(f"mode must be a Mode, got {mode!r}")
        if mode is Mode.MULTIPLICATIVE and np.any(s <= 0.0):
            raise ValueError("multiplicative scores must be strictly positive")
        s.flags.writeable = False
        self._scores = s
        self._mode = mode

    @property
    def scores(self) -> np.ndarray:
        return self._scores

    @property
    def mode(self) -> Mode:
        return self._mode

    def __len__(self) -> int:
        return self._scores.size

    def __repr__(self) -> str:
        return f"ScoreVector({self._scores.tolist()}, {self._mode})"


@dataclass(frozen=True)
class PointMass:
    """Deterministic forecast concentrated at a single value."""

    location: float

    def __post_init__(self):
        if not math.isfinite(self.location):
            raise ValueError("point-mass location must be finite")


@dataclass(frozen=True)
class Gaussian:
    """Normal forecast with mean ``mu`` and standard deviation ``sigma``."""

    mu: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.mu) and math.isfinite(self.sigma)):
            raise ValueError("gaussian parameters must be finite")
        if self.sigma <= 0.0:
            raise ValueError("sigma must be positive")


class Empirical:
    """Forecast given by a non-empty sample of equally weighted draws."""

    __slots__ = ("_samples",)

    def __init__(self, samples):
        s = np.array(samples, dtype=float)
        if s.ndim != 1 or s.size == 0:
            raise ValueError("empirical forecast needs at least one sample")
        if not np.all(np.isfinite(s)):
            raise ValueError("samples must be finite")
        s.flags.writeable = False
        self._samples = s

    @property
    def samples(self) -> np.ndarray:
        return self._samples

    def __repr__(self) -> str:
        return f"Empirical(n={self._samples.size})"


Forecast = Union[PointMass, Gaussian, Empirical]


def forecast_from_json(obj: dict) -> Forecast:
    """Parse a forecast literal like ``{"kind": "gaussian", "mu": 0, "sigma": 1}``."""
    kind = obj.get("kind")
    if kind == "gaussian":
        return Gaussian(float(obj["mu"]), float(obj["sigma"]))
    if kind == "pointmass":
        return PointMass(float(obj["loc"]))
    if kind == "empirical":
        return Empirical(obj["samples"])
    raise ValueError(f"unknown forecast kind: {kind!r}")


def forecast_to_json(f: Forecast) -> dict:
    if isinstance(f, Gaussian):
        return {"kind": "gaussian", "mu": f.mu, "sigma": f.sigma}
    if isinstance(f, PointMass):
        return {"kind": "pointmass", "loc": f.location}
    if isinstance(f, Empirical):
        return {"kind": "empirical", "samples": f.samples.tolist()}
    raise TypeError(f"not a forecast: {f!r}")


def sample_forecast(f: Forecast, rng: np.random.Generator, size: int) -> np.ndarray:
    """Draw ``size`` i.i.d. values from a forecast distribution."""
    if isinstance(f, PointMass):
        return np.full(size, f.location)
    if isinstance(f, Gaussian):
        return rng.normal(f.mu, f.sigma, size)
    if isinstance(f, Empirical):
        return rng.choice(f.samples, size=size, replace=True)
    raise TypeError(f"cannot sample from {f!r}")


def _norm_cdf(z: float) -> float:
    return 0.5 * (1.0 + math.erf(z / _SQRT_2))


def _norm_pdf(z: float) -> float:
    return math.exp(-0.5 * z * z) / _SQRT_2PI


def crps(f: Forecast, x: float) -> float:
    """Continuous ranked probability score of forecast ``f`` at outcome ``x``.

    CRPS(F, x) = E|X - x| - (1/2) E|X1 - X2| with X, X1, X2 i.i.d. from F.
    It generalizes absolute error: for a point mass it reduces to |loc - x|,
    and it is reported in the units of the observations.

    Point-mass and Gaussian forecasts use exact closed forms.  The Gaussian
    form is sigma * (z*(2*Phi(z) - 1) + 2*phi(z) - 1/sqrt(pi)) with
    z = (x - mu)/sigma; it is validated against a Monte-Carlo estimate of
    the defining expectations (see :func:`crps_monte_carlo`).  Empirical
    forecasts evaluate the pairwise term over sorted samples in O(m log m):
    sum_{i,j} |s_i - s_j| = 2 * sum_k (2k - m + 1) * s_(k).
    """
    if not math.isfinite(x):
        raise ValueError("observed outcome must be finite")
    if isinstance(f, PointMass):
        return abs(f.location - x)
    if isinstance(f, Gaussian):
        z = (x - f.mu) / f.sigma
        return f.sigma * (z * (2.0 * _norm_cdf(z) - 1.0) + 2.0 * _norm_pdf(z) - 1.0 / _SQRT_PI)
    if isinstance(f, Empirical):
        s = np.sort(f.samples)
        m = s.size
        first = float(np.mean(np.abs(s - x)))
        k = np.arange(m)
        pair = float(np.sum((2.0 * k - m + 1.0) * s))  # = sum_{i,j}|s_i - s_j| / 2
        return first - pair / (m * m)
    raise TypeError(f"not a forecast: {f!r}")


def crps_monte_carlo(
    f: Forecast, x: float, n_draws: int = 10**6, seed: int = 0
) -> tuple[float, float]:
    """Monte-Carlo estimate of the CRPS from its defining expectations.

    Samples i.i.d. triples (X, X1, X2) and averages |X - x| - 0.5|X1 - X2|.
    Returns ``(estimate, standard_error)``.  Independent of the closed forms
    in :func:`crps`, so it serves as their cross-check.
    """
    if not math.isfinite(x):
        raise ValueError("observed outcome must be finite")
    if n_draws < 2:
        raise ValueError("n_draws must be at least 2")
    rng = np.random.default_rng(seed)
    draws = sample_forecast(f, rng, 3 * n_draws).reshape(3, n_draws)
    stat = np.abs(draws[0] - x) - 0.5 * np.abs(draws[1] - draws[2])
    return float(stat.mean()), float(stat.std(ddof=1) / math.sqrt(n_draws))


def crps_measure(forecasts: Sequence[Forecast], x: float, a: float) -> ScoreVector:
    """Additive evidential scores ``a * CRPS(f_i, x)`` for each forecast.

    ``a`` must be negative: lower CRPS means a better forecast, and additive
    updating adds scores to the prior, so better forecasts must receive the
    larger (less negative) score.  |a| controls how aggressively badly
    scoring hypotheses get pushed to zero.
    """
    if not math.isfinite(a) or a >= 0.0:
        raise ValueError(f"scaling constant a must be negative, got {a!r}")
    if len(forecasts) == 0:
        raise ValueError("need at least one forecast")
    return ScoreVector([a * crps(f, x) for f in forecasts], Mode.ADDITIVE)


@dataclass(frozen=True)
class LossValue:
    """A non-negative loss together with the positive learning rate scaling it."""

    value: float
    learning_rate: float

    def __post_init__(self):
        if not (math.isfinite(self.value) and math.isfinite(self.learning_rate)):
            raise ValueError("loss and learning rate must be finite")
        if self.value < 0.0:
            raise ValueError("loss must be non-negative")
        if self.learning_rate <= 0.0:
            raise ValueError("learning rate must be positive")


def exp_loss_score(losses: Sequence[LossValue]) -> ScoreVector:
    """Multiplicative scores ``exp(-rate * loss)`` from a shared-rate loss list.

    The exponential map is the unique strictly decreasing solution of
    f(x) * f(y) = f(x + y), which is what makes losses additive across
    independent evidence while scores stay multiplicative.
    """
    losses = list(losses)
    if not losses:
        raise ValueError("need at least one loss")
    rate = losses[0].learning_rate
    if any(lv.learning_rate != rate for lv in losses):
        raise ValueError("all losses must share the same learning rate")
    values = np.array([lv.value for lv in losses], dtype=float)
    return ScoreVector(np.exp(-rate * values), Mode.MULTIPLICATIVE)


def min_abs_error_score(
    data: Sequence[tuple[float, float]],
    predictions: Sequence[Sequence[float]],
    a: float,
) -> ScoreVector:
    """Additive scores ``a * min_j |y_j - yhat_ij|`` over the data pairs.

    ``predictions[i][j]`` is hypothesis i's predicted y at the j-th data
    point.  The minimum runs over all data pairs.  This measure cannot be
    written as a function of an additive loss (the minimum is not additive),
    so it has no multiplicative counterpart.
    """
    if not math.isfinite(a) or a >= 0.0:
        raise ValueError(f"scaling constant a must be negative, got {a!r}")
    data = list(data)
    if not data:
        raise ValueError("data must be non-empty")
    y = np.array([pt[1] for pt in data], dtype=float)
    scores = []
    for i, preds in enumerate(predictions):
        p = np.asarray(preds, dtype=float)
        if p.shape != y.shape:
            raise ValueError(f"predictions for hypothesis {i} do not align with data")
        scores.append(a * float(np.min(np.abs(y - p))))
    if not scores:
        raise ValueError("need at least one hypothesis")
    return ScoreVector(scores, Mode.ADDITIVE)


def likelihood_score(likelihoods) -> ScoreVector:
    """Wrap strictly positive likelihood values as multiplicative scores.

    Zero likelihoods are rejected: a hypothesis logically refuted by the
    evidence is outside this measure's domain and must be handled by the
    caller.
    """
    v = np.asarray(likelihoods, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("need at least one likelihood")
    if not np.all(np.isfinite(v)) or np.any(v <= 0.0):
        raise ValueError("likelihoods must be finite and strictly positive")
    return ScoreVector(v, Mode.MULTIPLICATIVE)
