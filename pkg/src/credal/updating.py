"""The two updating rules and the conservative additive normalization.

Multiplicative route: posterior proportional to score times prior, rescaled
by the total (ratio-form updating).  It never zeroes a hypothesis whose
prior and score are positive.

Additive route: add scores to the prior, then renormalize with a single
additive constant, zeroing as few (and only the lowest) hypotheses as
possible.  Zeroing some hypotheses is usually unavoidable on this route,
and the minimal-constant normalization is the unique one that zeroes the
fewest.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .core import ProbabilityVector, as_values
from .measures import LossValue, Mode, ModeMismatchError, ScoreVector


class UnderflowError(ArithmeticError):
    """Every posterior weight vanished in floating point."""


class RuleKind(Enum):
    INFERENTIAL = "inferential"
    PREDICTIVE = "predictive"
    GENERAL_BAYES = "general_bayes"


@dataclass(frozen=True)
class UpdateRule:
    """An updating rule choice; general-Bayes carries its learning rate."""

    kind: RuleKind
    learning_rate: float | None = None

    def __post_init__(self):
        if self.kind is RuleKind.GENERAL_BAYES:
            if self.learning_rate is None or not self.learning_rate > 0.0:
                raise ValueError("general-Bayes rule needs a positive learning rate")
        elif self.learning_rate is not None:
            raise ValueError(f"{self.kind.value} rule takes no learning rate")

    @classmethod
    def inferential(cls) -> "UpdateRule":
        return cls(RuleKind.INFERENTIAL)

    @classmethod
    def predictive(cls) -> "UpdateRule":
        return cls(RuleKind.PREDICTIVE)

    @classmethod
    def general_bayes(cls, learning_rate: float) -> "UpdateRule":
        return cls(RuleKind.GENERAL_BAYES, learning_rate)

    @property
    def score_mode(self) -> Mode:
        return Mode.ADDITIVE if self.kind is RuleKind.PREDICTIVE else Mode.MULTIPLICATIVE


@dataclass(frozen=True)
class NormalizationResult:
    """Outcome of the additive normalization step.

    ``posterior[i]`` equals ``q[i] + d`` for survivors and 0 for the indices
    in ``zeroed``; ``m`` is the number of zeroed hypotheses.
    """

    posterior: ProbabilityVector
    d: float
    zeroed: frozenset[int]
    m: int

    def __post_init__(self):
        if self.m != len(self.zeroed):
            raise ValueError("m must equal the number of zeroed indices")


def _require_mode(s: ScoreVector, mode: Mode, op: str) -> None:
    if s.mode is not mode:
        raise ModeMismatchError(f"{op} needs a {mode.value} score vector, got {s.mode.value}")


def inferential_update(p: ProbabilityVector, s: ScoreVector) -> ProbabilityVector:
    """Multiplicative update: posterior[i] = s[i]*p[i] / sum_j s[j]*p[j].

    Keeps every hypothesis with positive prior at positive posterior (no
    hypothesis is ever conclusively ruled out).  The denominator uses
    numpy's pairwise summation; if it underflows to zero the update is
    undefined and :class:`UnderflowError` is raised.
    """
    _require_mode(s, Mode.MULTIPLICATIVE, "inferential_update")
    pv = p.values
    if pv.size != len(s):
        raise ValueError("prior and scores must have the same length")
    w = s.scores * pv
    denom = float(np.sum(w))
    if denom <= 0.0 or not np.isfinite(denom):
        raise UnderflowError(f"posterior weights sum to {denom!r}")
    return ProbabilityVector(w / denom)


def combine_additive(p: ProbabilityVector, s: ScoreVector) -> np.ndarray:
    """Raw combined vector q = p + s (finite, unconstrained sum)."""
    _require_mode(s, Mode.ADDITIVE, "combine_additive")
    if len(p) != len(s):
        raise ValueError("prior and scores must have the same length")
    return p.values + s.scores


def conservative_normalize(q) -> NormalizationResult:
    """Renormalize a raw vector by the minimal additive constant.

    Finds the unique posterior of the form ``max(q + d, 0)`` on the largest
    possible support: sort q descending, take the longest prefix whose last
    entry stays strictly positive after adding d = (1 - prefix sum)/prefix
    length, and zero the rest.  Minimizing the number of zeroed entries and
    minimizing d coincide.  Runs in O(n log n).

    Entries landing exactly on zero are reported as zeroed.  Equal entries
    at the threshold are kept in index order (lower index survives first);
    in exact arithmetic a tied pair is never split, so this only fixes the
    reported bookkeeping.
    """
    qv = as_values(q)
    if not np.all(np.isfinite(qv)):
        raise ValueError("entries must be finite")
    n = qv.size
    order = np.argsort(-qv, kind="stable")  # descending, ties by ascending index
    u = qv[order]
    csum = np.cumsum(u)
    ranks = np.arange(1, n + 1, dtype=float)
    cond = u + (1.0 - csum) / ranks > 0.0
    cond[0] = True  # u1 + (1 - u1) = 1 > 0 identically
    rho = int(np.nonzero(cond)[0][-1]) + 1
    d = (1.0 - float(csum[rho - 1])) / rho
    posterior = np.zeros(n)
    survivors = order[:rho]
    posterior[survivors] = qv[survivors] + d
    zeroed = frozenset(int(i) for i in order[rho:])
    return NormalizationResult(ProbabilityVector(posterior), d, zeroed, n - rho)


def brute_force_normalize_oracle(q) -> NormalizationResult:
    """Reference normalization by direct enumeration of zero counts.

    For m = 0, 1, ... zero the m smallest entries (ties resolved so the
    lower index survives first), set d = (1 - survivor sum)/(n - m), and
    return the first m for which every survivor stays strictly positive.
    Guarded to small n; must agree with :func:`conservative_normalize`.
    """
    qv = as_values(q)
    if not np.all(np.isfinite(qv)):
        raise ValueError("entries must be finite")
    n = qv.size
    if n > 12:
        raise ValueError("oracle is limited to n <= 12")
    order = np.argsort(-qv, kind="stable")
    for m in range(n):
        survivors = order[: n - m]
        d = (1.0 - float(np.sum(qv[survivors]))) / (n - m)
        if np.all(qv[survivors] + d > 0.0):
            posterior = np.zeros(n)
            posterior[survivors] = qv[survivors] + d
            zeroed = frozenset(int(i) for i in order[n - m :])
            return NormalizationResult(ProbabilityVector(posterior), d, zeroed, m)
    raise AssertionError("unreachable: m = n - 1 always leaves one positive survivor")


def predictive_update(p: ProbabilityVector, s: ScoreVector) -> NormalizationResult:
    """Additive update: combine scores with the prior, then conservatively normalize.

    The prior may contain zeros: a hypothesis zeroed earlier re-enters if
    later evidence lifts its combined value above the cut.
    """
    return conservative_normalize(combine_additive(p, s))


def general_bayes_update(p: ProbabilityVector, losses: Sequence[LossValue]) -> ProbabilityVector:
    """Loss-based update: posterior[i] proportional to exp(-rate*L[i]) * p[i].

    Equals :func:`inferential_update` with :func:`~credal.measures.exp_loss_score`
    scores; kept as a direct evaluation so the identity can be checked.
    """
    losses = list(losses)
    pv = p.values
    if pv.size != len(losses):
        raise ValueError("prior and losses must have the same length")
    rate = losses[0].learning_rate
    if any(lv.learning_rate != rate for lv in losses):
        raise ValueError("all losses must share the same learning rate")
    values = np.array([lv.value for lv in losses], dtype=float)
    w = np.exp(-rate * values) * pv
    denom = float(np.sum(w))
    if denom <= 0.0 or not np.isfinite(denom):
        raise UnderflowError(f"posterior weights sum to {denom!r}")
    return ProbabilityVector(w / denom)


def sequential_update(
    p0: ProbabilityVector, stream: Sequence[ScoreVector], rule: UpdateRule
) -> list[ProbabilityVector]:
    """Fold a stream of score vectors through a rule, returning the trajectory.

    The result has length ``len(stream) + 1`` and starts at ``p0``.  Every
    stream entry must carry the mode the rule expects (multiplicative for
    the ratio-form rules, additive for the predictive rule).
    """
    trajectory = [p0]
    p = p0
    for step, s in enumerate(stream):
        if s.mode is not rule.score_mode:
            raise ModeMismatchError(
                f"step {step}: {rule.kind.value} rule needs {rule.score_mode.value} "
                f"scores, got {s.mode.value}"
            )
        if rule.kind is RuleKind.PREDICTIVE:
            p = predictive_update(p, s).posterior
        else:
            p = inferential_update(p, s)
        trajectory.append(p)
    return trajectory
