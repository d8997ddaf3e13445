"""Why credibility functions should be probability vectors: dominance.

Distance to the ideal assignment (all mass on the best hypothesis) is
measured by squared Euclidean divergence.  Whatever hypothesis turns out
to be best, a non-probabilistic vector is strictly farther from the ideal
than its projection onto the simplex, so using it is throwing away
accuracy.  Probabilistic vectors admit no such sure improvement.
"""

import numpy as np

from credal import (
    Credibility,
    Divergence,
    ProbabilityVector,
    conservative_normalize,
    divergence,
    ideal_credibility,
    project_to_simplex,
    verify_dominance,
)

SQ = Divergence.SQUARED_EUCLIDEAN

c = Credibility([0.6, 0.6])
print("candidate credibility:", c.values, "(sums to 1.2)")

report = verify_dominance(c)
print("dominated:", report.dominated)
print("dominating vector:", report.dominator.values)
for j in range(2):
    vertex = ideal_credibility(j, 2)
    print(
        f"  if hypothesis {j} is best: candidate divergence "
        f"{divergence(SQ, c, vertex):.3f} vs dominator {divergence(SQ, report.dominator, vertex):.3f}"
        f"  (gap {report.per_vertex_gap[j]:+.3f})"
    )

# the dominator is just the nearest point on the simplex
print("\nprojection of (0.6, 0.6):", project_to_simplex(c.values).values)

# probabilistic vectors: a seeded randomized search finds no dominator
p = ProbabilityVector([0.3, 0.45, 0.25])
rep = verify_dominance(p, n_perturbations=20_000, seed=0)
print(f"\nsearch over 20000 candidates against {p.values}: dominated = {rep.dominated}")
print("best candidate's worst vertex gap:", rep.per_vertex_gap.min())
print("(negative: every candidate loses at some vertex -- evidence, not proof)")

# the projection is the same operation as the additive rule's normalization,
# computed by a different algorithm
rng = np.random.default_rng(7)
worst = 0.0
for _ in range(1000):
    q = rng.normal(0.0, 1.5, rng.integers(1, 9))
    gap = np.abs(project_to_simplex(q).values - conservative_normalize(q).posterior.values)
    worst = max(worst, float(gap.max()))
print(f"\nprojection vs conservative normalization over 1000 raw vectors: max diff {worst:.2e}")
