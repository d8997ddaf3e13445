"""Inductive updating of credibility functions over finite hypothesis sets.

Two updating rules over pluggable evidential measures: ratio-form
(multiplicative) updating, which never zeroes a hypothesis, and additive
updating with conservative renormalization, which zeroes as few hypotheses
as possible.  Plus: CRPS-based forecast scoring, accuracy-dominance checks,
sampled verification of the algebraic axioms behind the rules, and a seeded
simulation harness for comparing the rules on predictive tasks.
"""

from .axioms import (
    AxiomCheck,
    AxiomReport,
    check_combination_axioms,
    check_commutation,
    check_group_axioms,
    construct_regularity_violation,
    general_bayes_equivalence_report,
    regularity_violation_report,
    verify_general_bayes_equivalence,
)
from .core import (
    DEFAULT_EPS,
    Credibility,
    HypothesisSet,
    ProbabilityVector,
    ideal_credibility,
    is_probabilistic,
    read_labeled_csv,
    uniform,
    write_labeled_csv,
)
from .dominance import Divergence, DominanceReport, divergence, project_to_simplex, verify_dominance
from .experiments import (
    ExperimentConfig,
    ExperimentResult,
    ModelSpec,
    RuleAggregate,
    StepRecord,
    generate_data,
    run_experiment,
    weighted_predictive_score,
)
from .measures import (
    Empirical,
    Forecast,
    Gaussian,
    LossValue,
    Mode,
    ModeMismatchError,
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
    sample_forecast,
)
from .updating import (
    NormalizationResult,
    RuleKind,
    UnderflowError,
    UpdateRule,
    brute_force_normalize_oracle,
    combine_additive,
    conservative_normalize,
    general_bayes_update,
    inferential_update,
    predictive_update,
    sequential_update,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheck",
    "AxiomReport",
    "Credibility",
    "DEFAULT_EPS",
    "Divergence",
    "DominanceReport",
    "Empirical",
    "ExperimentConfig",
    "ExperimentResult",
    "Forecast",
    "Gaussian",
    "HypothesisSet",
    "LossValue",
    "Mode",
    "ModeMismatchError",
    "ModelSpec",
    "NormalizationResult",
    "PointMass",
    "ProbabilityVector",
    "RuleAggregate",
    "RuleKind",
    "ScoreVector",
    "StepRecord",
    "UnderflowError",
    "UpdateRule",
    "brute_force_normalize_oracle",
    "check_combination_axioms",
    "check_commutation",
    "check_group_axioms",
    "combine_additive",
    "conservative_normalize",
    "construct_regularity_violation",
    "crps",
    "crps_measure",
    "crps_monte_carlo",
    "divergence",
    "exp_loss_score",
    "forecast_from_json",
    "forecast_to_json",
    "general_bayes_equivalence_report",
    "general_bayes_update",
    "generate_data",
    "ideal_credibility",
    "inferential_update",
    "is_probabilistic",
    "likelihood_score",
    "min_abs_error_score",
    "predictive_update",
    "project_to_simplex",
    "read_labeled_csv",
    "regularity_violation_report",
    "run_experiment",
    "sample_forecast",
    "sequential_update",
    "uniform",
    "verify_dominance",
    "verify_general_bayes_equivalence",
    "weighted_predictive_score",
    "write_labeled_csv",
]
