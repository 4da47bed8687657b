"""Reset-vector algebra and the min/median ranking algorithms.

Reset inversion recovers the unique candidate reset vector of a ranking
vector at a given reset probability; its nonnegativity decides PageRank
membership at that probability. On top of this sit the entrywise-min and
entrywise-median operators and the trusted ranking algorithms built from
personalized PageRanks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (AllZeroMedian, AllZeroMin, EmptyTrustedSet,
                     IncoherentCenters, InconsistentReset)
from .graph import DirectedGraph, is_coherent, max_coherent_subset
from .rank import ResetModel, as_rank_vector, pagerank, point_mass

NEGATIVITY_TOL = 1e-9     # matches the solver's residual guarantee
ZERO_TOL = 1e-15          # structural zero vs float dust
FIXED_POINT_GAP = 1e-12
QUOTIENT_TOL = 1e-8


def invert_reset(g: DirectedGraph, p, eps: float) -> np.ndarray:
    """Candidate reset vector of p at reset probability eps.

    Returns p[v]/eps - ((1-eps)/eps) * sum_{w in N_in(v)} p[w]/d_out(w).
    Entries may be negative; they always sum to 1.
    """
    p = as_rank_vector(p, g.n)
    if not 0.0 < eps < 1.0:
        raise ValueError(f"reset probability must lie in (0,1), got {eps}")
    pm = g.stepper().step(p)
    return p / eps - ((1.0 - eps) / eps) * pm


def is_pagerank_at(g: DirectedGraph, p, eps: float) -> bool:
    """True iff p is a PageRank of g at reset probability eps.

    Decided by nonnegativity of the inverted reset vector, with a small
    tolerance for accumulated numeric error.
    """
    return bool(invert_reset(g, p, eps).min() >= -NEGATIVITY_TOL)


def is_pagerank(g: DirectedGraph, p) -> tuple[bool, float | None]:
    """Whether p is a PageRank of g at any reset probability.

    Holds iff the support of p is closed under out-edges. On success the
    second element is a witness reset probability at which p is
    realizable (entries below 1e-15 count as zero).
    """
    p = as_rank_vector(p, g.n)
    src, dst = g.edge_array()
    if np.any((p[src] > ZERO_TOL) & (p[dst] <= ZERO_TOL)):
        return False, None
    sigma = g.stepper().step(p)
    x = np.zeros(g.n)
    pos = sigma > 0
    x[pos] = 1.0 - p[pos] / sigma[pos]
    return True, float(max(0.5, x.max(initial=0.0)))


@dataclass(frozen=True)
class RealizationReport:
    """Outcome of recovering (reset vector, reset probability) for a rank.

    ``kind`` is "fixed_point" when p = pM, so every reset probability
    works with reset = p; "unique" when a single consistent probability
    was recovered; "none" when the quotients agree but the recovered pair
    is infeasible (reset has negative entries or eps is outside (0,1)).
    """

    kind: str
    eps: float | None = None
    reset: np.ndarray | None = None


def recover_reset_probability(g: DirectedGraph, p, reset) -> RealizationReport:
    """Recover the reset probability realizing p with reset vector R.

    At any vertex where R differs from pM the probability is pinned to
    (p[v] - (pM)[v]) / (R[v] - (pM)[v]); the quotient is evaluated at the
    vertex with the largest gap and checked for consistency everywhere
    else (in residual form, |num - eps*den| <= 1e-8*max(1, |den|), which
    is the stable equivalent of comparing quotients to 1e-8). Raises
    InconsistentReset when p cannot be a PageRank for R.
    """
    p = as_rank_vector(p, g.n)
    r = as_rank_vector(reset, g.n)
    pm = g.stepper().step(p)
    den = r - pm
    gaps = np.abs(den)
    if gaps.max() <= FIXED_POINT_GAP:
        return RealizationReport(kind="fixed_point", reset=p.copy())
    num = p - pm
    v = int(np.argmax(gaps))
    eps = float(num[v] / den[v])
    qualifying = gaps > FIXED_POINT_GAP
    resid = np.abs(num[qualifying] - eps * den[qualifying])
    scale = np.maximum(1.0, np.abs(den[qualifying]))
    if np.any(resid > QUOTIENT_TOL * scale):
        raise InconsistentReset(
            "per-vertex reset probabilities disagree; the vector is not a "
            "PageRank for this reset vector")
    if not 0.0 < eps < 1.0:
        return RealizationReport(kind="none", eps=eps)
    candidate = invert_reset(g, p, eps)
    if candidate.min() < -NEGATIVITY_TOL:
        return RealizationReport(kind="none", eps=eps, reset=candidate)
    return RealizationReport(kind="unique", eps=eps, reset=candidate)


def min_rank(vectors) -> np.ndarray:
    """L1-normalized entrywise minimum of rank vectors."""
    vs = _validated_stack(vectors)
    m = vs.min(axis=0)
    total = m.sum()
    if total == 0.0:
        raise AllZeroMin("entrywise minimum is identically zero")
    return m / total


def median_rank(vectors) -> np.ndarray:
    """L1-normalized entrywise median of an odd number of rank vectors."""
    vs = _validated_stack(vectors)
    if vs.shape[0] % 2 == 0:
        raise ValueError("median requires an odd number of vectors")
    m = np.median(vs, axis=0)
    total = m.sum()
    if total == 0.0:
        raise AllZeroMedian("entrywise median is identically zero")
    return m / total


def _validated_stack(vectors) -> np.ndarray:
    vs = [np.asarray(v, dtype=np.float64) for v in vectors]
    if not vs:
        raise ValueError("need at least one vector")
    n = vs[0].size
    return np.stack([as_rank_vector(v, n) for v in vs])


def min_ppr(g: DirectedGraph, centers, eps: float) -> np.ndarray:
    """Normalized entrywise min of the personalized PageRanks of centers.

    The centers must be coherent, which guarantees the minimum is not
    identically zero.
    """
    cs = sorted(set(int(c) for c in centers))
    if not is_coherent(g, cs):
        raise IncoherentCenters(f"centers {cs} have no common reachable vertex")
    pprs = [pagerank(g, ResetModel(point_mass(g.n, c), eps)) for c in cs]
    return min_rank(pprs)


def t_ppr(g: DirectedGraph, trusted, eps: float) -> np.ndarray:
    """Personalized PageRank from the smallest-id trusted vertex."""
    ts = sorted(set(int(t) for t in trusted))
    if not ts:
        raise EmptyTrustedSet("trusted set is empty")
    return pagerank(g, ResetModel(point_mass(g.n, ts[0]), eps))


def t_min_ppr(g: DirectedGraph, trusted, k: int, eps: float) -> np.ndarray:
    """Min-PPR over up to k trusted centers.

    The k smallest trusted ids are chosen (independently of the graph's
    edges), then restricted to a maximum-size coherent subset.
    """
    ts = sorted(set(int(t) for t in trusted))
    if not ts:
        raise EmptyTrustedSet("trusted set is empty")
    if k < 1:
        raise ValueError(f"center budget must be at least 1, got {k}")
    chosen = ts[:min(k, len(ts))]
    kept = max_coherent_subset(g, chosen)
    return min_ppr(g, kept, eps)


@dataclass(frozen=True)
class HardSelectionReport:
    """Diagnostics from the median-filtered center selection.

    ``divergences`` maps each candidate center to its worst relative
    shortfall against the entrywise median over coordinates where the
    median clears 1/(2 n^delta); ``threshold_empty`` flags that no
    coordinate cleared it (divergences then default to zero). ``gamma``
    is recorded for reporting but never used at runtime.
    """

    medians: np.ndarray
    divergences: dict[int, float]
    kept: list[int]
    discarded: list[int]
    gamma: float
    delta: float
    threshold_empty: bool = False

    def to_dict(self) -> dict:
        return {
            "medians": [float(x) for x in self.medians],
            "divergences": {str(c): float(x)
                            for c, x in self.divergences.items()},
            "kept": list(self.kept),
            "discarded": list(self.discarded),
            "gamma": self.gamma,
            "delta": self.delta,
            "threshold_empty": self.threshold_empty,
        }


def t_min_ppr_hard(g: DirectedGraph, trusted, gamma: float, delta: float,
                   k: int, eps: float) -> tuple[np.ndarray, HardSelectionReport]:
    """Min-PPR over centers filtered by agreement with their median.

    Takes the 2k-1 smallest trusted ids (dropping the largest when the
    truncated set has even size, since the median needs an odd count),
    computes their PPRs and entrywise medians, and discards the k-1
    centers whose PPRs diverge most from the median on coordinates where
    the median is at least 1/(2 n^delta). Ties discard larger ids first.
    """
    ts = sorted(set(int(t) for t in trusted))
    if not ts:
        raise EmptyTrustedSet("trusted set is empty")
    if k < 1:
        raise ValueError(f"center budget must be at least 1, got {k}")
    if delta < 1.0:
        raise ValueError(f"significance exponent must be >= 1, got {delta}")
    candidates = ts[:min(2 * k - 1, len(ts))]
    if len(candidates) % 2 == 0:
        candidates = candidates[:-1]

    pprs = {c: pagerank(g, ResetModel(point_mass(g.n, c), eps))
            for c in candidates}
    medians = np.median(np.stack([pprs[c] for c in candidates]), axis=0)
    threshold = 1.0 / (2.0 * g.n ** delta)
    significant = medians >= threshold
    threshold_empty = not bool(significant.any())

    divergences: dict[int, float] = {}
    for c in candidates:
        if threshold_empty:
            divergences[c] = 0.0
        else:
            rel = (medians[significant] - pprs[c][significant]) \
                / medians[significant]
            divergences[c] = float(rel.max())

    n_discard = min(k - 1, len(candidates) - 1)
    by_worst = sorted(candidates, key=lambda c: (-divergences[c], -c))
    discarded = sorted(by_worst[:n_discard])
    remaining = sorted(set(candidates) - set(discarded))
    kept = max_coherent_subset(g, remaining)
    out = min_rank([pprs[c] for c in kept])
    report = HardSelectionReport(medians=medians, divergences=divergences,
                                 kept=kept, discarded=discarded,
                                 gamma=gamma, delta=delta,
                                 threshold_empty=threshold_empty)
    return out, report
