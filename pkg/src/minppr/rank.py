"""Walk distributions, reference rank, and PageRank solvers.

All vectors are plain float64 numpy arrays. A rank vector is nonnegative
and sums to one; :func:`as_rank_vector` validates and should be used at
API boundaries. Functions here are pure and deterministic for fixed
inputs and backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MultipleEssentialClasses, NonConvergence
from .graph import DirectedGraph, strong_component_labels

SUM_TOL = 1e-12
CONVERGENCE_TOL = 1e-13
RESIDUAL_TOL = 1e-10
STATIONARY_ITER_CAP = 10 ** 6


def as_rank_vector(values, n: int | None = None) -> np.ndarray:
    """Validate and return a rank vector as a float64 array."""
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("rank vector must be one-dimensional")
    if n is not None and v.size != n:
        raise ValueError(f"rank vector has length {v.size}, expected {n}")
    if v.size == 0:
        raise ValueError("rank vector must be nonempty")
    if v.min() < 0:
        raise ValueError("rank vector entries must be nonnegative")
    if abs(v.sum() - 1.0) > SUM_TOL:
        raise ValueError(f"rank vector sums to {v.sum()!r}, expected 1")
    return v


def point_mass(n: int, v: int) -> np.ndarray:
    """Rank vector concentrated on vertex v."""
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range [0, {n})")
    out = np.zeros(n, dtype=np.float64)
    out[v] = 1.0
    return out


def uniform_vector(n: int) -> np.ndarray:
    """Uniform rank vector over n vertices."""
    return np.full(n, 1.0 / n, dtype=np.float64)


@dataclass(frozen=True)
class ResetModel:
    """Reset vector plus reset probability; defines the PageRank walk."""

    reset: np.ndarray
    eps: float

    def __post_init__(self):
        object.__setattr__(self, "reset", as_rank_vector(self.reset))
        if not 0.0 < self.eps < 1.0:
            raise ValueError(f"reset probability must lie in (0,1), got {self.eps}")


def walk_distribution(g: DirectedGraph, init, t: int) -> np.ndarray:
    """Distribution of the uniform walk after t steps from init."""
    p = as_rank_vector(init, g.n)
    if t < 0:
        raise ValueError("step count must be nonnegative")
    stepper = g.stepper()
    for _ in range(t):
        p = stepper.step(p)
    return p.copy() if t == 0 else p


def _essential_class_count(g: DirectedGraph) -> int:
    ncomp, labels = strong_component_labels(g)
    src, dst = g.edge_array()
    cross = labels[src] != labels[dst]
    non_sink = np.zeros(ncomp, dtype=bool)
    non_sink[labels[src[cross]]] = True
    return int(ncomp - non_sink.sum())


def reference_rank(g: DirectedGraph) -> np.ndarray:
    """Stationary distribution of the uniform walk.

    Computed by iterating the lazy kernel (M+I)/2, which shares fixed
    points with M and converges whenever the chain has a unique essential
    communicating class; raises MultipleEssentialClasses otherwise.
    """
    if _essential_class_count(g) >= 2:
        raise MultipleEssentialClasses(
            "uniform walk has multiple essential classes; stationary "
            "distribution is not unique")
    p, iters, delta = g.stepper().lazy_stationary(
        uniform_vector(g.n), CONVERGENCE_TOL, STATIONARY_ITER_CAP)
    if delta > CONVERGENCE_TOL:
        raise NonConvergence(
            f"lazy iteration still moving {delta:.3e} after {iters} steps")
    return p


def pagerank(g: DirectedGraph, rm: ResetModel) -> np.ndarray:
    """Unique fixed point of p = (1-eps) p M + eps R, by power iteration.

    Iterates from p0 = R until the L1 change drops to 1e-13; the returned
    vector has fixed-point residual at most 1e-10.
    """
    if rm.reset.size != g.n:
        raise ValueError("reset vector length does not match graph")
    cap = math.ceil(math.log(1e-16) / math.log1p(-rm.eps)) + 100
    p, iters, delta = g.stepper().pagerank(
        rm.reset, rm.eps, CONVERGENCE_TOL, cap)
    if delta > CONVERGENCE_TOL:
        raise NonConvergence(
            f"power iteration still moving {delta:.3e} after {iters} steps")
    residual = np.abs((1.0 - rm.eps) * g.stepper().step(p)
                      + rm.eps * rm.reset - p).sum()
    if residual > RESIDUAL_TOL:
        raise NonConvergence(f"fixed-point residual {residual:.3e} too large")
    return p


def pagerank_series_oracle(g: DirectedGraph, rm: ResetModel,
                           horizon: int) -> np.ndarray:
    """Truncated geometric-series PageRank, renormalized.

    Sums eps * (1-eps)^i * (R M^i) for i = 0..horizon and divides by
    1 - (1-eps)^(horizon+1) so the result is a rank vector at any
    horizon. The unnormalized truncation error is at most
    (1-eps)^(horizon+1) in L1.
    """
    if rm.reset.size != g.n:
        raise ValueError("reset vector length does not match graph")
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    stepper = g.stepper()
    q = rm.reset.copy()
    acc = rm.eps * q
    weight = rm.eps
    for _ in range(horizon):
        q = stepper.step(q)
        weight *= 1.0 - rm.eps
        acc += weight * q
    mass = 1.0 - (1.0 - rm.eps) ** (horizon + 1)
    return acc / mass
