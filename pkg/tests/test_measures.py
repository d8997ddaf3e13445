import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from credal import (
    Empirical,
    Gaussian,
    LossValue,
    Mode,
    PointMass,
    ScoreVector,
    crps,
    crps_measure,
    crps_monte_carlo,
    exp_loss_score,
    forecast_from_json,
    forecast_to_json,
    likelihood_score,
    min_abs_error_score,
)

# closed-form value of the standard-normal CRPS at its mean: 2*phi(0) - 1/sqrt(pi)
STD_NORMAL_CRPS_AT_MEAN = 2.0 / math.sqrt(2.0 * math.pi) - 1.0 / math.sqrt(math.pi)


def test_score_vector_validation():
    s = ScoreVector([0.5, 1.5], Mode.MULTIPLICATIVE)
    assert s.mode is Mode.MULTIPLICATIVE
    ScoreVector([-1.0, 0.0], Mode.ADDITIVE)
    with pytest.raises(ValueError):
        ScoreVector([0.0, 1.0], Mode.MULTIPLICATIVE)
    with pytest.raises(ValueError):
        ScoreVector([np.inf, 1.0], Mode.ADDITIVE)
    with pytest.raises(TypeError):
        ScoreVector([1.0], "multiplicative")


def test_forecast_validation():
    with pytest.raises(ValueError):
        Gaussian(0.0, 0.0)
    with pytest.raises(ValueError):
        Gaussian(np.nan, 1.0)
    with pytest.raises(ValueError):
        PointMass(np.inf)
    with pytest.raises(ValueError):
        Empirical([])
    with pytest.raises(ValueError):
        Empirical([1.0, np.nan])


def test_crps_point_mass_examples():
    assert crps(PointMass(3.0), 5.0) == 2.0
    assert crps(PointMass(5.0), 5.0) == 0.0
    with pytest.raises(ValueError):
        crps(PointMass(3.0), np.inf)


def test_crps_gaussian_at_mean():
    assert crps(Gaussian(0.0, 1.0), 0.0) == pytest.approx(0.23370, abs=1e-4)
    assert crps(Gaussian(0.0, 1.0), 0.0) == pytest.approx(STD_NORMAL_CRPS_AT_MEAN, abs=1e-15)


@pytest.mark.parametrize("z", [0.0, 1.0, 2.0])
def test_gaussian_closed_form_matches_monte_carlo(z):
    # the closed form must agree with a direct sampled estimate of
    # E|X - x| - 0.5 E|X1 - X2| before we trust it anywhere else
    mu, sigma = 0.7, 1.3
    x = mu + z * sigma
    est, se = crps_monte_carlo(Gaussian(mu, sigma), x, n_draws=200_000, seed=17)
    assert abs(crps(Gaussian(mu, sigma), x) - est) <= 3.0 * se


def test_gaussian_crps_scales_linearly_in_sigma():
    for z in (0.0, 1.0, 2.0):
        base = crps(Gaussian(0.0, 1.0), z)
        for sigma in (0.5, 2.0, 7.5):
            assert crps(Gaussian(0.0, sigma), z * sigma) == pytest.approx(sigma * base, rel=1e-12)


def test_empirical_estimator_matches_naive_double_sum():
    rng = np.random.default_rng(5)
    for m in (1, 2, 3, 50, 301):
        s = rng.normal(0.0, 2.0, m)
        x = float(rng.normal())
        naive = np.mean(np.abs(s - x)) - np.abs(s[:, None] - s[None, :]).sum() / (2 * m * m)
        assert crps(Empirical(s), x) == pytest.approx(naive, abs=1e-12)


def test_empirical_converges_to_gaussian_closed_form():
    rng = np.random.default_rng(42)
    samples = rng.normal(0.0, 1.0, 100_000)
    f = Empirical(samples)
    for x in (-1.0, 0.0, 1.0):
        assert abs(crps(f, x) - crps(Gaussian(0.0, 1.0), x)) < 0.01


@given(
    st.floats(-50, 50),
    st.floats(-50, 50),
    st.floats(0.01, 20),
)
def test_crps_non_negative(x, mu, sigma):
    assert crps(PointMass(mu), x) >= 0.0
    assert crps(Gaussian(mu, sigma), x) >= 0.0


@given(st.lists(st.floats(-100, 100), min_size=1, max_size=60), st.floats(-100, 100))
def test_empirical_crps_non_negative(samples, x):
    assert crps(Empirical(samples), x) >= 0.0


def test_crps_measure_examples():
    # forecasts engineered to have CRPS 0.1 and 0.5 at x = 0
    fs = [PointMass(0.1), PointMass(0.5)]
    sv = crps_measure(fs, 0.0, -1.0)
    assert sv.mode is Mode.ADDITIVE
    np.testing.assert_allclose(sv.scores, [-0.1, -0.5])
    with pytest.raises(ValueError):
        crps_measure(fs, 0.0, 1.0)
    with pytest.raises(ValueError):
        crps_measure(fs, 0.0, 0.0)
    # equal CRPS in every coordinate is posterior-neutral under additive updating
    same = crps_measure([PointMass(1.0), PointMass(-1.0)], 0.0, -2.0)
    assert same.scores[0] == same.scores[1]


def test_exp_loss_score_examples():
    assert exp_loss_score([LossValue(0.0, 1.0)]).scores[0] == 1.0
    assert exp_loss_score([LossValue(math.log(4.0), 1.0)]).scores[0] == pytest.approx(0.25, rel=1e-15)
    sv = exp_loss_score([LossValue(0.0, 0.5), LossValue(math.log(4.0), 0.5)])
    np.testing.assert_allclose(sv.scores, [1.0, 0.5], rtol=1e-15)
    assert sv.mode is Mode.MULTIPLICATIVE
    with pytest.raises(ValueError):
        exp_loss_score([LossValue(1.0, 1.0), LossValue(1.0, 2.0)])


def test_loss_value_validation():
    with pytest.raises(ValueError):
        LossValue(-0.1, 1.0)
    with pytest.raises(ValueError):
        LossValue(1.0, 0.0)
    with pytest.raises(ValueError):
        LossValue(np.nan, 1.0)


@given(st.floats(0, 20), st.floats(0, 20), st.floats(0.1, 4))
def test_exponential_scores_multiply_over_loss_sums(l1, l2, rate):
    s1 = exp_loss_score([LossValue(l1, rate)]).scores[0]
    s2 = exp_loss_score([LossValue(l2, rate)]).scores[0]
    joint = exp_loss_score([LossValue(l1 + l2, rate)]).scores[0]
    assert abs(s1 * s2 - joint) <= 1e-12


def test_min_abs_error_examples():
    data = [(0.0, 0.0), (1.0, 2.0)]
    sv = min_abs_error_score(data, [[0.0, 1.0]], a=-1.0)  # hypothesis f(x) = x
    assert sv.scores[0] == 0.0  # min of {0, 1}
    assert sv.mode is Mode.ADDITIVE
    # a perfect fit scores zero regardless of the scale
    perfect = min_abs_error_score(data, [[0.0, 2.0]], a=-7.0)
    assert perfect.scores[0] == 0.0
    with pytest.raises(ValueError):
        min_abs_error_score([], [[]], a=-1.0)
    with pytest.raises(ValueError):
        min_abs_error_score(data, [[0.0]], a=-1.0)  # misaligned predictions


def test_likelihood_score_examples():
    sv = likelihood_score([0.8, 0.2])
    assert sv.mode is Mode.MULTIPLICATIVE
    np.testing.assert_array_equal(sv.scores, [0.8, 0.2])
    likelihood_score([1.0, 1.0])  # neutral evidence is fine
    with pytest.raises(ValueError):
        likelihood_score([0.0, 0.5])
    with pytest.raises(ValueError):
        likelihood_score([-0.2, 0.5])


def test_forecast_json_literals():
    cases = [
        ({"kind": "gaussian", "mu": 0.0, "sigma": 1.0}, Gaussian),
        ({"kind": "pointmass", "loc": 3.0}, PointMass),
        ({"kind": "empirical", "samples": [1.0, 2.0]}, Empirical),
    ]
    for obj, cls in cases:
        f = forecast_from_json(obj)
        assert isinstance(f, cls)
        assert forecast_from_json(json.loads(json.dumps(forecast_to_json(f)))).__class__ is cls
    assert forecast_to_json(forecast_from_json(cases[0][0])) == cases[0][0]
    with pytest.raises(ValueError):
        forecast_from_json({"kind": "cauchy", "loc": 0.0})
