"""Sampled numerical checks of the algebraic requirements on updating.

Any combination function worth using must be commutative, associative, and
have a constant mixed partial derivative; that pins it down to addition or
multiplication.  The rescaling used to normalize must commute with the
combination; that pins it to x + k for addition and k*x for multiplication.
This module turns those requirements (plus the ordered-group axioms that
give an alternative route to the same conclusion) into seeded finite-sample
checks with explicit residuals, and provides the constructive witness that
the additive route must zero hypotheses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import ProbabilityVector
from .measures import LossValue, Mode, ModeMismatchError, ScoreVector, exp_loss_score
from .updating import general_bayes_update, inferential_update, predictive_update


@dataclass(frozen=True)
class AxiomCheck:
    """One named check: pass/fail, worst residual, optional fitted constant."""

    name: str
    passed: bool
    residual: float
    fitted: float | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "residual": self.residual}
        if self.fitted is not None:
            out["fitted"] = self.fitted
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class AxiomReport:
    """Bundle of checks over one sampled suite."""

    checks: tuple[AxiomCheck, ...]
    n_samples: int
    seed: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def residual(self, name: str) -> float:
        return self.check(name).residual

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "checks": [c.to_json() for c in self.checks],
        }


def _sample_triples(
    domain: tuple[float, float], n_samples: int, seed: int, diagonal_probes: bool
) -> np.ndarray:
    lo, hi = float(domain[0]), float(domain[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise ValueError("domain must be a bounded interval (lo, hi) with lo < hi")
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(lo, hi, (n_samples, 3))
    span = hi - lo
    probes = [(lo + 0.2 * span, lo + 0.35 * span, lo + 0.6 * span)]
    if diagonal_probes:
        # derivative checks must see the diagonal, where kinked candidates hide
        probes += [(lo + t * span,) * 3 for t in (0.25, 0.5, 0.75)]
    return np.vstack([pts, np.array(probes)])


def _safe_eval(f: Callable[[float, float], float], x: float, y: float) -> float:
    try:
        v = float(f(x, y))
    except (ArithmeticError, ValueError):
        return math.nan
    return v


def check_combination_axioms(
    f: Callable[[float, float], float],
    domain: tuple[float, float] = (0.1, 10.0),
    n_samples: int = 1000,
    seed: int = 0,
    tol: float = 1e-6,
    fd_step: float = 1e-4,
    fd_rtol: float = 1e-4,
) -> AxiomReport:
    """Check a candidate combination function on sampled triples.

    Four checks, each with its worst absolute residual over the samples:

    * ``commutativity``: |f(x,y) - f(y,x)|
    * ``associativity``: |f(f(x,y),z) - f(x,f(y,z))|
    * ``differentiability``: relative stability of the central-difference
      mixed partial between steps ``fd_step`` and ``fd_step/2`` (tolerance
      ``fd_rtol``); a kink in f shows up here as step-dependence
    * ``mixed_partial_constancy``: spread of the mixed-partial estimates
      around their median, which is reported as the fitted constant

    A non-finite value fails the corresponding check and records where it
    occurred.  Sample triples always include one fixed asymmetric probe and
    three diagonal probes in addition to the seeded draws.
    """
    triples = _sample_triples(domain, n_samples, seed, diagonal_probes=True)

    def worst(pairs_fn) -> tuple[float, str]:
        res, note = 0.0, ""
        for x, y, z in triples:
            r = pairs_fn(float(x), float(y), float(z))
            if math.isnan(r):
                return math.inf, f"non-finite value at (x={x:.6g}, y={y:.6g}, z={z:.6g})"
            if r > res:
                res = r
        return res, note

    def comm(x, y, z):
        a, b = _safe_eval(f, x, y), _safe_eval(f, y, x)
        return abs(a - b) if math.isfinite(a - b) else math.nan

    def assoc(x, y, z):
        left = _safe_eval(f, _safe_eval(f, x, y), z)
        right = _safe_eval(f, x, _safe_eval(f, y, z))
        return abs(left - right) if math.isfinite(left - right) else math.nan

    def mixed_partial(x, y, h):
        v = (
            _safe_eval(f, x + h, y + h)
            - _safe_eval(f, x + h, y - h)
            - _safe_eval(f, x - h, y + h)
            + _safe_eval(f, x - h, y - h)
        )
        return v / (4.0 * h * h)

    comm_res, comm_note = worst(comm)
    assoc_res, assoc_note = worst(assoc)

    est_h = np.array([mixed_partial(x, y, fd_step) for x, y, _ in triples])
    est_h2 = np.array([mixed_partial(x, y, fd_step / 2.0) for x, y, _ in triples])

    if not np.all(np.isfinite(est_h)) or not np.all(np.isfinite(est_h2)):
        bad = int(np.flatnonzero(~(np.isfinite(est_h) & np.isfinite(est_h2)))[0])
        where = f"non-finite derivative estimate at (x={triples[bad,0]:.6g}, y={triples[bad,1]:.6g})"
        diff_res, diff_note = math.inf, where
        const_res, const_note, k = math.inf, where, math.nan
    else:
        scale = np.maximum(1.0, np.maximum(np.abs(est_h), np.abs(est_h2)))
        diff_res = float(np.max(np.abs(est_h - est_h2) / scale))
        diff_note = ""
        k = float(np.median(est_h))
        const_res = float(np.max(np.abs(est_h - k)))
        const_note = ""

    checks = (
        AxiomCheck("commutativity", comm_res <= tol, comm_res, note=comm_note),
        AxiomCheck("associativity", assoc_res <= tol, assoc_res, note=assoc_note),
        AxiomCheck("differentiability", diff_res <= fd_rtol, diff_res, note=diff_note),
        AxiomCheck(
            "mixed_partial_constancy",
            const_res <= tol,
            const_res,
            fitted=None if math.isnan(k) else k,
            note=const_note,
        ),
    )
    return AxiomReport(checks, n_samples, seed)


def _combiner(combination: Mode) -> Callable[[float, float], float]:
    if combination is Mode.MULTIPLICATIVE:
        return lambda a, b: a * b
    if combination is Mode.ADDITIVE:
        return lambda a, b: a + b
    raise ValueError(f"unsupported combination: {combination!r}")


def check_commutation(
    combination: Mode,
    rescale_family: Callable[[float], float],
    n_samples: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
    domain: tuple[float, float] = (0.1, 10.0),
) -> AxiomReport:
    """Check that a rescaling function commutes with a combination function.

    Evaluation order must not matter: rescaling after combining (y, z) and
    then combining with x must equal rescaling after combining (x, y) and
    then combining with z, i.e. f(c(x, f(c(y, z)))) == f(c(f(c(x, y)), z))
    on every sampled triple.  Residuals are relative.  Constant-scale
    families pass for the matching combination; genuinely nonlinear
    rescalings such as squaring fail.
    """
    c = _combiner(combination)
    f = rescale_family
    triples = _sample_triples(domain, n_samples, seed, diagonal_probes=False)
    worst, note = 0.0, ""
    for x, y, z in triples:
        x, y, z = float(x), float(y), float(z)
        left = f(c(x, f(c(y, z))))
        right = f(c(f(c(x, y)), z))
        if not (math.isfinite(left) and math.isfinite(right)):
            worst, note = math.inf, f"non-finite value at (x={x:.6g}, y={y:.6g}, z={z:.6g})"
            break
        r = abs(left - right) / max(1.0, abs(left), abs(right))
        if r > worst:
            worst = r
    checks = (AxiomCheck("commutation", worst <= tol, worst, note=note),)
    return AxiomReport(checks, n_samples, seed)


def check_group_axioms(
    structure: Mode,
    n_samples: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
    archimedean_bound: int = 10**6,
    domain: tuple[float, float] | None = None,
) -> AxiomReport:
    """Sampled check that evidential scores form a totally ordered Archimedean group.

    ``structure`` selects (positive reals, *) or (reals, +).  Seven checks:
    closure, associativity, identity, inverse, commutativity, total order
    (trichotomy), and the Archimedean property.  The Archimedean witness
    search is bounded; pairs without a witness inside the bound are noted
    rather than failed, since the axiom is existential and unbounded.
    Multiplicative sampling stays away from zero so inverses are tame.
    """
    if structure is Mode.MULTIPLICATIVE:
        lo, hi = domain if domain is not None else (0.1, 10.0)
        if lo <= 0.0:
            raise ValueError("multiplicative domain must be positive")
        op, identity, inv = (lambda a, b: a * b), 1.0, (lambda a: 1.0 / a)
        in_carrier = lambda v: math.isfinite(v) and v > 0.0
        above_identity_lo = max(1.01, lo)
    elif structure is Mode.ADDITIVE:
        lo, hi = domain if domain is not None else (-10.0, 10.0)
        op, identity, inv = (lambda a, b: a + b), 0.0, (lambda a: -a)
        in_carrier = math.isfinite
        above_identity_lo = 0.01
    else:
        raise ValueError(f"unsupported structure: {structure!r}")
    if above_identity_lo >= hi:
        raise ValueError("domain too small to sample elements above the identity")

    rng = np.random.default_rng(seed)
    e1 = rng.uniform(lo, hi, n_samples)
    e2 = rng.uniform(lo, hi, n_samples)
    e3 = rng.uniform(lo, hi, n_samples)
    growers = rng.uniform(above_identity_lo, hi, n_samples)  # strictly above the identity

    closure_res, closure_note = 0.0, ""
    assoc_res = ident_res = inverse_res = comm_res = order_res = 0.0
    for a, b, c3 in zip(e1, e2, e3):
        a, b, c3 = float(a), float(b), float(c3)
        ab = op(a, b)
        if not in_carrier(ab):
            closure_res, closure_note = math.inf, f"op({a:.6g}, {b:.6g}) left the carrier"
            break
        v = abs(op(ab, c3) - op(a, op(b, c3)))
        assoc_res = max(assoc_res, v / max(1.0, abs(op(ab, c3))))
        ident_res = max(ident_res, abs(op(a, identity) - a), abs(op(identity, a) - a))
        inverse_res = max(inverse_res, abs(op(a, inv(a)) - identity), abs(op(inv(a), a) - identity))
        comm_res = max(comm_res, abs(ab - op(b, a)))
        order_res = max(order_res, 0.0 if (a > b) != (a <= b) else 1.0)  # trichotomy

    missing, max_witness = 0, 0
    for target, step in zip(e1, growers):
        target, step = float(target), float(step)
        acc, nsteps = step, 1
        while acc <= target and nsteps < archimedean_bound:
            # doubling keeps the bounded search cheap; any exceeding power suffices
            acc, nsteps = op(acc, acc), nsteps * 2
        if acc > target:
            max_witness = max(max_witness, nsteps)
        else:
            missing += 1
    arch_note = f"max witness n = {max_witness}"
    if missing:
        arch_note += f"; {missing} pair(s) without witness within bound {archimedean_bound}"

    checks = (
        AxiomCheck("closure", math.isfinite(closure_res), closure_res, note=closure_note),
        AxiomCheck("associativity", assoc_res <= tol, assoc_res),
        AxiomCheck("identity", ident_res <= tol, ident_res),
        AxiomCheck("inverse", inverse_res <= tol, inverse_res),
        AxiomCheck("commutativity", comm_res <= tol, comm_res),
        AxiomCheck("total_order", order_res == 0.0, order_res),
        AxiomCheck("archimedean", True, 0.0, note=arch_note),
    )
    return AxiomReport(checks, n_samples, seed)


def construct_regularity_violation(e: ScoreVector) -> tuple[ProbabilityVector, int]:
    """Build a prior that the additive rule must zero at the weakest score.

    For non-constant additive scores, the hypothesis with the smallest score
    has combined value below the zero-truncation cut whenever its prior mass
    is under ``mean(e) - min(e)``.  The returned prior puts
    ``min(mean(e) - min(e), 1/n) / 2`` on that hypothesis and spreads the
    rest uniformly, which makes its combined value the strict minimum, so
    the additive update provably zeroes it.  Returns the prior and the index
    that gets zeroed.  Constant scores admit no such prior and are rejected.
    """
    if e.mode is not Mode.ADDITIVE:
        raise ModeMismatchError("regularity violations are an additive-rule phenomenon")
    s = e.scores
    n = s.size
    if n < 2:
        raise ValueError("need at least two hypotheses")
    gap = float(np.mean(s) - np.min(s))  # = -r in the violation inequality
    if gap == 0.0:
        raise ValueError("constant scores cannot force a zero: shift invariance")
    weakest = int(np.argmin(s))
    h_min = 0.5 * min(gap, 1.0 / n)
    prior = np.full(n, (1.0 - h_min) / (n - 1))
    prior[weakest] = h_min
    return ProbabilityVector(prior), weakest


def verify_general_bayes_equivalence(
    p: ProbabilityVector,
    losses: Sequence[LossValue],
    n_random_pairs: int = 1000,
    tol: float = 1e-12,
    seed: int = 0,
) -> bool:
    """Confirm the loss-based rule is the exponential-score special case.

    Checks (a) that the direct loss-based update agrees with the ratio-form
    update fed exponential-loss scores, entrywise within ``tol``; and (b)
    that the score map g(x) = exp(-rate*x) satisfies g(x)g(y) = g(x+y) on
    seeded random pairs within ``tol``.  Returns the conjunction.
    """
    losses = list(losses)
    direct = general_bayes_update(p, losses)
    composed = inferential_update(p, exp_loss_score(losses))
    if float(np.max(np.abs(direct.values - composed.values))) > tol:
        return False
    rate = losses[0].learning_rate
    rng = np.random.default_rng(seed)
    xs = rng.uniform(0.0, 10.0, n_random_pairs)
    ys = rng.uniform(0.0, 10.0, n_random_pairs)
    lhs = np.exp(-rate * xs) * np.exp(-rate * ys)
    rhs = np.exp(-rate * (xs + ys))
    return float(np.max(np.abs(lhs - rhs))) <= tol


def regularity_violation_report(n_instances: int = 1000, seed: int = 0) -> AxiomReport:
    """Batch check: every constructed violation yields at least one exact zero.

    Draws random non-constant additive score vectors, builds the violating
    prior for each, runs the additive update, and counts instances whose
    posterior has no zero entry (the residual; must be 0) and instances
    where the predicted index survived.
    """
    rng = np.random.default_rng(seed)
    no_zero = 0
    wrong_index = 0
    for _ in range(n_instances):
        n = int(rng.integers(2, 9))
        scores = rng.uniform(-1.0, 1.0, n)
        scores[rng.integers(0, n)] -= rng.uniform(0.1, 2.0)  # ensure non-constant
        e = ScoreVector(scores, Mode.ADDITIVE)
        prior, idx = construct_regularity_violation(e)
        result = predictive_update(prior, e)
        if result.m == 0:
            no_zero += 1
        if idx not in result.zeroed:
            wrong_index += 1
    checks = (
        AxiomCheck("every_instance_zeroes_some_hypothesis", no_zero == 0, float(no_zero)),
        AxiomCheck("predicted_index_is_zeroed", wrong_index == 0, float(wrong_index)),
    )
    return AxiomReport(checks, n_instances, seed)


def general_bayes_equivalence_report(
    n_instances: int = 200, seed: int = 0, tol: float = 1e-12
) -> AxiomReport:
    """Batch check of the loss-based/ratio-form equivalence on random instances."""
    rng = np.random.default_rng(seed)
    worst_id = 0.0
    ok = True
    for i in range(n_instances):
        n = int(rng.integers(2, 9))
        prior = rng.dirichlet(np.ones(n))
        rate = float(rng.uniform(0.1, 3.0))
        losses = [LossValue(float(v), rate) for v in rng.uniform(0.0, 5.0, n)]
        p = ProbabilityVector(prior)
        direct = general_bayes_update(p, losses)
        composed = inferential_update(p, exp_loss_score(losses))
        worst_id = max(worst_id, float(np.max(np.abs(direct.values - composed.values))))
        ok = ok and verify_general_bayes_equivalence(p, losses, n_random_pairs=50, tol=tol, seed=i)
    checks = (
        AxiomCheck("loss_rule_equals_exponential_score_rule", worst_id <= tol, worst_id),
        AxiomCheck("exponential_law_on_random_pairs", ok, 0.0 if ok else math.inf),
    )
    return AxiomReport(checks, n_instances, seed)
