"""Ranking-quality metrics: TV distance, mixing times, distortion, entropy."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import MixingTimeout
from .graph import DirectedGraph
from .rank import as_rank_vector, point_mass

MIXING_STEP_CAP = 10 ** 5


def tv_distance(p, q) -> float:
    """Total variation distance between two rank vectors."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise ValueError(f"length mismatch: {p.shape} vs {q.shape}")
    return float(0.5 * np.abs(p - q).sum())


@dataclass(frozen=True)
class MixingQuery:
    """Mixing-time query: tolerance rho plus a start specification.

    ``source`` is None for the worst case over all start vertices, an int
    for a single start vertex, or a rank vector for a start distribution.
    """

    rho: float = 0.25
    source: int | np.ndarray | None = None

    def __post_init__(self):
        if not 0.0 < self.rho < 1.0:
            raise ValueError(f"rho must lie in (0,1), got {self.rho}")

    @classmethod
    def worst_case(cls, rho: float = 0.25) -> "MixingQuery":
        return cls(rho=rho, source=None)

    @classmethod
    def from_vertex(cls, v: int, rho: float = 0.25) -> "MixingQuery":
        return cls(rho=rho, source=int(v))

    @classmethod
    def from_distribution(cls, r, rho: float = 0.25) -> "MixingQuery":
        return cls(rho=rho, source=np.asarray(r, dtype=np.float64))


def _scan_single(g: DirectedGraph, init: np.ndarray, rho: float,
                 ref: np.ndarray) -> int:
    stepper = g.stepper()
    p = init
    for t in range(MIXING_STEP_CAP + 1):
        if tv_distance(p, ref) <= rho:
            return t
        p = stepper.step(p)
    raise MixingTimeout(
        f"no mixing within {MIXING_STEP_CAP} steps at rho={rho}")


def _scan_worst_case(g: DirectedGraph, rho: float, ref: np.ndarray) -> int:
    stepper = g.stepper()
    dists = np.eye(g.n, dtype=np.float64)
    for t in range(MIXING_STEP_CAP + 1):
        tv = 0.5 * np.abs(dists - ref).sum(axis=1)
        if tv.max() <= rho:
            return t
        dists = stepper.step_many(dists)
    raise MixingTimeout(
        f"no mixing within {MIXING_STEP_CAP} steps at rho={rho}")


def mixing_time(g: DirectedGraph, query: MixingQuery, ref) -> int:
    """Steps until the uniform walk is within rho of the reference rank.

    For a vertex or distribution source this is the first time the TV
    distance drops to rho; for the worst case it is the first time every
    start vertex is simultaneously within rho. ``ref`` must be the
    graph's reference rank.
    """
    ref = as_rank_vector(ref, g.n)
    if query.source is None:
        return _scan_worst_case(g, query.rho, ref)
    if isinstance(query.source, (int, np.integer)):
        return _scan_single(g, point_mass(g.n, int(query.source)),
                            query.rho, ref)
    init = as_rank_vector(query.source, g.n)
    return _scan_single(g, init, query.rho, ref)


def per_vertex_mixing_times(g: DirectedGraph, vertices, rho: float,
                            ref) -> np.ndarray:
    """First-hit mixing time for each listed start vertex (one batch scan)."""
    ref = as_rank_vector(ref, g.n)
    vertices = np.asarray(sorted(set(int(v) for v in vertices)))
    stepper = g.stepper()
    dists = np.zeros((vertices.size, g.n), dtype=np.float64)
    dists[np.arange(vertices.size), vertices] = 1.0
    hit = np.full(vertices.size, -1, dtype=np.int64)
    for t in range(MIXING_STEP_CAP + 1):
        tv = 0.5 * np.abs(dists - ref).sum(axis=1)
        fresh = (hit < 0) & (tv <= rho)
        hit[fresh] = t
        if (hit >= 0).all():
            return hit
        dists = stepper.step_many(dists)
    raise MixingTimeout(
        f"no mixing within {MIXING_STEP_CAP} steps at rho={rho}")


def expected_mixing_time(g: DirectedGraph, reset, rho: float, ref) -> float:
    """Expectation of the per-vertex mixing time under a reset draw."""
    reset = as_rank_vector(reset, g.n)
    support = np.flatnonzero(reset > 0)
    times = per_vertex_mixing_times(g, support, rho, ref)
    return float(np.dot(reset[support], times))


@dataclass(frozen=True)
class DistortionParams:
    """Significance exponent delta; ranks below 1/n^delta are clamped."""

    delta: float = 1.0

    def __post_init__(self):
        if self.delta < 1.0:
            raise ValueError(f"delta must be at least 1, got {self.delta}")


@dataclass(frozen=True)
class DistortionReport:
    """Per-vertex stretch/contraction/distortion and the graph maximum."""

    delta: float
    stretch: np.ndarray
    contraction: np.ndarray
    distortion: np.ndarray
    graph_distortion: float

    @property
    def per_vertex(self) -> list[tuple[int, float, float, float]]:
        return [(v, float(s), float(c), float(d)) for v, (s, c, d) in
                enumerate(zip(self.stretch, self.contraction, self.distortion))]

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["vertex", "stretch", "contraction", "distortion"])
            for row in self.per_vertex:
                writer.writerow([row[0], f"{row[1]:.17g}",
                                 f"{row[2]:.17g}", f"{row[3]:.17g}"])

    def summary(self) -> dict:
        return {
            "delta": self.delta,
            "graph_distortion": self.graph_distortion,
            "max_stretch": float(self.stretch.max()),
            "max_contraction": float(self.contraction.max()),
            "argmax_vertex": int(np.argmax(self.distortion)),
        }

    def to_json(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            json.dump(self.summary(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def distortion(x, g: DirectedGraph, params: DistortionParams,
               ref) -> DistortionReport:
    """Multiplicative accuracy of x against the reference rank.

    Values below the significance threshold 1/n^delta are clamped to it,
    so insignificant vertices ranked as insignificant contribute
    distortion exactly 1.
    """
    x = as_rank_vector(x, g.n)
    ref = as_rank_vector(ref, g.n)
    thr = 1.0 / g.n ** params.delta
    xs = np.maximum(x, thr)
    rs = np.maximum(ref, thr)
    stretch = xs / rs
    contraction = rs / xs
    dist = np.maximum(stretch, contraction)
    return DistortionReport(delta=params.delta, stretch=stretch,
                            contraction=contraction, distortion=dist,
                            graph_distortion=float(dist.max()))


def entropy(p) -> float:
    """Shannon entropy in bits, with 0 log 0 taken as 0."""
    p = as_rank_vector(p)
    pos = p[p > 0]
    return float(-(pos * np.log2(pos)).sum())
