import json

import numpy as np
import pytest

from credal import (
    ExperimentConfig,
    Gaussian,
    ModelSpec,
    PointMass,
    ProbabilityVector,
    UpdateRule,
    crps,
    crps_monte_carlo,
    Empirical,
    generate_data,
    is_probabilistic,
    run_experiment,
    weighted_predictive_score,
)


def small_config(**overrides):
    base = dict(
        seed=0,
        truth=Gaussian(0.0, 1.0),
        models=(
            ModelSpec("good", Gaussian(0.0, 1.0)),
            ModelSpec("near", Gaussian(0.5, 1.0)),
            ModelSpec("far", Gaussian(5.0, 1.0)),
        ),
        horizon=10,
        rules=(UpdateRule.inferential(), UpdateRule.predictive()),
        a=-1.0,
        replications=3,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def test_generate_data_examples():
    np.testing.assert_array_equal(generate_data(0, PointMass(2.0), 3), [2.0, 2.0, 2.0])
    a = generate_data(123, Gaussian(0.0, 1.0), 5)
    b = generate_data(123, Gaussian(0.0, 1.0), 5)
    np.testing.assert_array_equal(a, b)
    c = generate_data(124, Gaussian(0.0, 1.0), 5)
    assert np.any(a != c)
    with pytest.raises(ValueError):
        generate_data(0, Gaussian(0.0, 1.0), 0)


def test_generate_data_varies_by_replication():
    a = generate_data(0, Gaussian(0.0, 1.0), 5, replication=0)
    b = generate_data(0, Gaussian(0.0, 1.0), 5, replication=1)
    assert np.any(a != b)


def test_weighted_score_single_component():
    models = [ModelSpec("m1", PointMass(3.0)), ModelSpec("m2", Gaussian(0.0, 1.0))]
    p = ProbabilityVector([1.0, 0.0])
    assert weighted_predictive_score(p, models, 5.0, mc_samples=500, seed=1) == 2.0


def test_weighted_score_identical_components():
    models = [ModelSpec("m1", PointMass(1.0)), ModelSpec("m2", PointMass(1.0))]
    p = ProbabilityVector([0.5, 0.5])
    assert weighted_predictive_score(p, models, 4.0, mc_samples=500, seed=1) == 3.0


def test_weighted_score_two_atom_mixture():
    # exact mixture CRPS: E|X| = 1, E|X1 - X2|/2 = 0.5, total 0.5; confirmed
    # against the sampling estimate of the defining expectations
    models = [ModelSpec("m1", PointMass(0.0)), ModelSpec("m2", PointMass(2.0))]
    p = ProbabilityVector([0.5, 0.5])
    mix = Empirical(np.array([0.0, 2.0]))  # two equally weighted atoms
    assert crps(mix, 0.0) == 0.5
    est, se = crps_monte_carlo(mix, 0.0, n_draws=200_000, seed=2)
    assert abs(est - 0.5) <= 3 * se
    score = weighted_predictive_score(p, models, 0.0, mc_samples=4000, seed=3)
    assert score == pytest.approx(0.5, abs=0.05)


def test_config_validation_lists_fields():
    with pytest.raises(ValueError, match="horizon"):
        small_config(horizon=0)
    with pytest.raises(ValueError, match="a:"):
        small_config(a=1.0)
    with pytest.raises(ValueError, match="replications"):
        small_config(replications=0)
    with pytest.raises(ValueError, match="models"):
        small_config(models=())
    with pytest.raises(ValueError, match="rules"):
        small_config(rules=())
    with pytest.raises(ValueError, match="models"):
        # density scoring needs Gaussian forecasts
        small_config(models=(ModelSpec("pm", PointMass(0.0)),))


def test_config_json_round_trip():
    cfg = small_config(rules=(UpdateRule.predictive(), UpdateRule.general_bayes(0.7)))
    blob = json.dumps(cfg.to_json())
    back = ExperimentConfig.from_json(json.loads(blob))
    assert back == cfg
    assert sorted(json.loads(blob)) == [
        "a",
        "horizon",
        "likelihood_floor",
        "models",
        "replications",
        "rules",
        "seed",
        "truth",
    ]


def test_single_model_posterior_pinned():
    cfg = small_config(
        models=(ModelSpec("only", Gaussian(0.0, 1.0)),),
        rules=(UpdateRule.inferential(), UpdateRule.predictive(), UpdateRule.general_bayes(1.0)),
        horizon=5,
        replications=2,
    )
    result = run_experiment(cfg, mc_samples=50)
    for rec in result.records:
        np.testing.assert_array_equal(rec.posterior, [1.0])


def test_identical_models_stay_symmetric():
    cfg = small_config(
        models=(ModelSpec("twin1", Gaussian(0.0, 1.0)), ModelSpec("twin2", Gaussian(0.0, 1.0))),
        rules=(UpdateRule.inferential(), UpdateRule.predictive(), UpdateRule.general_bayes(1.0)),
        horizon=5,
        replications=2,
    )
    result = run_experiment(cfg, mc_samples=50)
    for rec in result.records:
        np.testing.assert_allclose(rec.posterior, [0.5, 0.5], atol=1e-15)


def test_recorded_posteriors_are_probabilistic():
    result = run_experiment(small_config(), mc_samples=50)
    assert result.records
    for rec in result.records:
        assert is_probabilistic(rec.posterior, 1e-9)


def test_inferential_never_zeroes_predictive_eliminates():
    result = run_experiment(small_config(horizon=20), mc_samples=50)
    far = 2
    inf_rows = [r for r in result.records if r.rule == "inferential"]
    pred_rows = [r for r in result.records if r.rule == "predictive"]
    assert all(r.posterior[far] > 0.0 for r in inf_rows)
    # the bad model hits exact zero in every replication and stays there for
    # nearly all steps (brief re-entry on extreme draws is allowed by the rule)
    for rep in range(3):
        rows = [r for r in pred_rows if r.replication == rep]
        assert any(r.posterior[far] == 0.0 for r in rows)
    assert np.mean([r.posterior[far] == 0.0 for r in pred_rows]) > 0.9


def test_reruns_are_byte_identical():
    cfg = small_config(horizon=6, replications=2)
    a = run_experiment(cfg, mc_samples=60).to_csv_text()
    b = run_experiment(cfg, mc_samples=60).to_csv_text()
    assert a == b


def test_csv_layout():
    cfg = small_config(horizon=2, replications=2)
    text = run_experiment(cfg, mc_samples=10).to_csv_text()
    lines = text.strip().split("\n")
    assert lines[0] == "rule,replication,t,model,posterior,crps,mixture_crps"
    # one row per (rule, replication, t, model), in that order
    assert len(lines) == 1 + 2 * 2 * 2 * 3
    first = lines[1].split(",")
    assert first[0] == "inferential" and first[1] == "0" and first[2] == "1" and first[3] == "good"
    second = lines[2].split(",")
    assert second[3] == "near"


def test_aggregates_have_standard_errors():
    result = run_experiment(small_config(horizon=4, replications=3), mc_samples=40)
    assert {agg.rule for agg in result.aggregates} == {"inferential", "predictive"}
    for agg in result.aggregates:
        assert len(agg.replication_means) == 3
        assert agg.se_mixture_crps >= 0.0
        assert agg.mean_mixture_crps == pytest.approx(np.mean(agg.replication_means))
