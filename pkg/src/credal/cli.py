"""Command-line interface.

Subcommands: ``update`` (one updating step over CSV vectors), ``simulate``
(run an experiment config), ``dominance`` (accuracy-dominance report for a
credibility CSV), ``props`` (run the axiom suites).  Exit codes: 0 success,
1 an expected-pass suite failed, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .axioms import (
    check_combination_axioms,
    check_commutation,
    check_group_axioms,
    general_bayes_equivalence_report,
    regularity_violation_report,
)
from .core import Credibility, ProbabilityVector, read_labeled_csv, write_labeled_csv
from .dominance import verify_dominance
from .experiments import ExperimentConfig, run_experiment
from .measures import LossValue, Mode, ModeMismatchError, ScoreVector
from .updating import general_bayes_update, inferential_update, predictive_update


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="credal")
    sub = parser.add_subparsers(dest="command", required=True)

    up = sub.add_parser("update", help="apply one updating step to a prior CSV")
    up.add_argument("--rule", required=True, choices=["inferential", "predictive", "general-bayes"])
    up.add_argument("--prior", required=True, help="prior CSV (label,value)")
    up.add_argument("--scores", required=True, help="scores CSV (label,value)")
    up.add_argument("--out", required=True, help="posterior CSV to write")
    up.add_argument("--a", type=float, default=None, help="negative scale applied to additive scores")
    up.add_argument("--rate", type=float, default=1.0, help="learning rate for general-bayes")
    up.set_defaults(func=_cmd_update)

    sim = sub.add_parser("simulate", help="run an experiment config")
    sim.add_argument("--config", required=True, help="experiment config JSON")
    sim.add_argument("--out-dir", required=True, help="directory for results.csv")
    sim.set_defaults(func=_cmd_simulate)

    dom = sub.add_parser("dominance", help="accuracy-dominance report for a credibility CSV")
    dom.add_argument("--cred", required=True, help="credibility CSV (label,value)")
    dom.add_argument("--eps", type=float, default=1e-9)
    dom.add_argument("--seed", type=int, default=0)
    dom.add_argument("--perturbations", type=int, default=10_000)
    dom.set_defaults(func=_cmd_dominance)

    pr = sub.add_parser("props", help="run the axiom suites")
    pr.add_argument("--tol", type=float, default=1e-6)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--samples", type=int, default=1000)
    pr.set_defaults(func=_cmd_props)

    return parser


def _cmd_update(args) -> int:
    hyps, prior_values = read_labeled_csv(args.prior)
    score_hyps, score_values = read_labeled_csv(args.scores)
    if hyps.labels != score_hyps.labels:
        raise ValueError("prior and scores must list the same labels in the same order")
    prior = ProbabilityVector(prior_values)

    if args.rule == "inferential":
        posterior = inferential_update(prior, ScoreVector(score_values, Mode.MULTIPLICATIVE))
    elif args.rule == "general-bayes":
        losses = [LossValue(float(v), args.rate) for v in score_values]
        posterior = general_bayes_update(prior, losses)
    else:
        if args.a is not None:
            if not args.a < 0.0:
                raise ValueError(f"--a must be negative, got {args.a!r}")
            score_values = args.a * score_values
        result = predictive_update(prior, ScoreVector(score_values, Mode.ADDITIVE))
        write_labeled_csv(args.out, hyps.labels, result.posterior.values)
        print(json.dumps({"d": result.d, "zeroed": sorted(result.zeroed), "rule": "predictive"}))
        return 0

    write_labeled_csv(args.out, hyps.labels, posterior.values)
    return 0


def _cmd_simulate(args) -> int:
    from pathlib import Path

    cfg = ExperimentConfig.from_file(args.config)
    result = run_experiment(cfg)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    result.write_csv(out_dir / "results.csv")
    print(
        json.dumps(
            {
                "results": str(out_dir / "results.csv"),
                "aggregates": [
                    {
                        "rule": agg.rule,
                        "mean_mixture_crps": agg.mean_mixture_crps,
                        "se_mixture_crps": agg.se_mixture_crps,
                    }
                    for agg in result.aggregates
                ],
            }
        )
    )
    return 0


def _cmd_dominance(args) -> int:
    hyps, values = read_labeled_csv(args.cred)
    report = verify_dominance(
        Credibility(values), eps=args.eps, n_perturbations=args.perturbations, seed=args.seed
    )
    out = {"labels": list(hyps.labels)}
    out.update(report.to_json())
    print(json.dumps(out))
    return 0


def _props_suites(tol: float, seed: int, samples: int):
    mul = lambda a, b: a * b
    add = lambda a, b: a + b
    sub_ = lambda a, b: a - b
    mx = lambda a, b: max(a, b)
    yield ("combination/multiplication", "pass",
           check_combination_axioms(mul, n_samples=samples, seed=seed, tol=tol))
    yield ("combination/addition", "pass",
           check_combination_axioms(add, n_samples=samples, seed=seed, tol=tol))
    yield ("combination/subtraction", "fail",
           check_combination_axioms(sub_, n_samples=samples, seed=seed, tol=tol))
    yield ("combination/max", "fail",
           check_combination_axioms(mx, n_samples=samples, seed=seed, tol=tol))
    yield ("commutation/multiplicative-constant-scale", "pass",
           check_commutation(Mode.MULTIPLICATIVE, lambda x: 0.5 * x,
                             n_samples=samples, seed=seed, tol=tol))
    yield ("commutation/additive-constant-shift", "pass",
           check_commutation(Mode.ADDITIVE, lambda x: x - 0.3,
                             n_samples=samples, seed=seed, tol=tol))
    yield ("commutation/multiplicative-square", "fail",
           check_commutation(Mode.MULTIPLICATIVE, lambda x: x * x,
                             n_samples=samples, seed=seed, tol=tol))
    yield ("group/multiplicative", "pass",
           check_group_axioms(Mode.MULTIPLICATIVE, n_samples=samples, seed=seed, tol=tol))
    yield ("group/additive", "pass",
           check_group_axioms(Mode.ADDITIVE, n_samples=samples, seed=seed, tol=tol))
    yield ("regularity-violation/forced-zero", "pass",
           regularity_violation_report(n_instances=max(1, samples // 2), seed=seed))
    yield ("general-bayes/equivalence", "pass",
           general_bayes_equivalence_report(n_instances=max(1, samples // 5), seed=seed))


def _cmd_props(args) -> int:
    out = []
    failures = 0
    for name, expected, report in _props_suites(args.tol, args.seed, args.samples):
        ok = report.passed if expected == "pass" else not report.passed
        failures += 0 if ok else 1
        out.append({"suite": name, "expected": expected, "ok": ok, "report": report.to_json()})
    print(json.dumps(out, indent=2))
    return 1 if failures else 0


def dispatch(argv=None) -> int:
    """Parse argv, run the selected subcommand, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        code = exc.code
        return 0 if code in (0, None) else 2
    try:
        return args.func(args)
    except (ValueError, KeyError, IndexError, TypeError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(dispatch())
