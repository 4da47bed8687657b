"""Spam game: admissible graph mutations, cost functions, gain and ratio.

A spammer may add new vertices for free and rewrite the out-edges of
vertices it owns (new vertices plus a purchased set disjoint from the
trusted set). Gains are measured as the rank a tagged algorithm assigns
to spam-plus-purchased vertices; the ratio divides the purchase cost by
that gain.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .algebra import t_min_ppr, t_ppr
from .errors import (DegenerateCost, EmptyTrustedSet, InvalidBase,
                     TrustedPurchase)
from .graph import DirectedGraph, build_graph, load_edge_list, save_edge_list
from .rank import ResetModel, pagerank, point_mass, uniform_vector

GAIN_FLOOR = 1e-15
ALGO_TAGS = ("tppr", "tminppr", "upr")


def _raw_out_edges(g: DirectedGraph, v: int) -> np.ndarray:
    """Sorted out-neighbors of v with a convention self-loop stripped."""
    nbrs = g.out_neighbors(v)
    if nbrs.size == 1 and nbrs[0] == v:
        return nbrs[:0]
    return nbrs


def validate_spam_graph(base: DirectedGraph, trusted, purchased,
                        spam_graph: DirectedGraph) -> bool:
    """Whether spam_graph is reachable from base by an admissible attack.

    Vertices 0..n_base-1 must appear unchanged; only new vertices and the
    purchased set may have altered out-edges, and the purchased set must
    avoid the trusted set.
    """
    trusted = set(int(t) for t in trusted)
    purchased = set(int(p) for p in purchased)
    if spam_graph.n < base.n:
        return False
    if not trusted or any(t < 0 or t >= base.n for t in trusted):
        return False
    if purchased & trusted or any(p < 0 or p >= base.n for p in purchased):
        return False
    for v in range(base.n):
        if v in purchased:
            continue
        if not np.array_equal(_raw_out_edges(base, v),
                              _raw_out_edges(spam_graph, v)):
            return False
    return True


@dataclass(frozen=True)
class SpamScenario:
    """Base graph, trusted and purchased sets, and the attacked graph."""

    base: DirectedGraph
    trusted: frozenset[int]
    purchased: frozenset[int]
    spam_graph: DirectedGraph

    def __post_init__(self):
        object.__setattr__(self, "trusted", frozenset(self.trusted))
        object.__setattr__(self, "purchased", frozenset(self.purchased))
        if not self.trusted:
            raise EmptyTrustedSet("scenario needs a nonempty trusted set")
        if not validate_spam_graph(self.base, self.trusted, self.purchased,
                                   self.spam_graph):
            raise ValueError("spam graph alters vertices the spammer "
                             "does not own")

    @property
    def spam_nodes(self) -> frozenset[int]:
        return frozenset(range(self.base.n, self.spam_graph.n))

    @property
    def spam_and_purchased(self) -> frozenset[int]:
        return self.spam_nodes | self.purchased


@dataclass(frozen=True)
class CostFunction:
    """Normalized prices over the purchasable vertices.

    ``values`` has one entry per base vertex, zero on the trusted set and
    summing to one elsewhere.
    """

    values: np.ndarray
    trusted: frozenset[int]

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "trusted", frozenset(self.trusted))
        ts = sorted(self.trusted)
        if v.min() < 0:
            raise ValueError("costs must be nonnegative")
        if ts and np.any(v[ts] != 0):
            raise ValueError("trusted vertices are not purchasable")
        if abs(v.sum() - 1.0) > 1e-9:
            raise ValueError(f"costs sum to {v.sum()!r}, expected 1")

    def of(self, vertices) -> float:
        idx = sorted(set(int(v) for v in vertices))
        return float(self.values[idx].sum()) if idx else 0.0


def _restrict_and_normalize(p: np.ndarray, trusted: set[int]) -> np.ndarray:
    values = p.copy()
    values[sorted(trusted)] = 0.0
    total = values.sum()
    if total <= GAIN_FLOOR:
        raise DegenerateCost("no rank mass outside the trusted set")
    return values / total


def ppr_cost(base: DirectedGraph, trusted, eps: float) -> CostFunction:
    """Prices proportional to the trusted PPR, restricted off the trust set."""
    ts = set(int(t) for t in trusted)
    if not ts:
        raise EmptyTrustedSet("trusted set is empty")
    p = t_ppr(base, ts, eps)
    return CostFunction(values=_restrict_and_normalize(p, ts),
                        trusted=frozenset(ts))


def minppr_cost(base: DirectedGraph, trusted, k: int,
                eps: float) -> CostFunction:
    """Prices from the average of the k component PPRs, off the trust set."""
    ts = set(int(t) for t in trusted)
    if not ts:
        raise EmptyTrustedSet("trusted set is empty")
    if k < 1:
        raise ValueError(f"center budget must be at least 1, got {k}")
    centers = sorted(ts)[:min(k, len(ts))]
    pprs = [pagerank(base, ResetModel(point_mass(base.n, c), eps))
            for c in centers]
    avg = np.mean(pprs, axis=0)
    return CostFunction(values=_restrict_and_normalize(avg, ts),
                        trusted=frozenset(ts))


def spam_gain(scenario: SpamScenario, algo: str, eps: float,
              k: int | None = None) -> float:
    """Rank the tagged algorithm awards to spam and purchased vertices."""
    if algo not in ALGO_TAGS:
        raise ValueError(f"unknown algorithm tag {algo!r}")
    h = scenario.spam_graph
    if algo == "tppr":
        p = t_ppr(h, scenario.trusted, eps)
    elif algo == "tminppr":
        if k is None:
            raise ValueError("tminppr needs a center budget k")
        p = t_min_ppr(h, scenario.trusted, k, eps)
    else:
        p = pagerank(h, ResetModel(uniform_vector(h.n), eps))
    targets = sorted(scenario.spam_and_purchased)
    return float(p[targets].sum()) if targets else 0.0


def spam_ratio(scenario: SpamScenario, cost: CostFunction, algo: str,
               eps: float, k: int | None = None) -> float:
    """Purchase cost divided by spam gain; inf when the gain is zero."""
    gain = spam_gain(scenario, algo, eps, k=k)
    if gain <= GAIN_FLOOR:
        return math.inf
    return cost.of(scenario.purchased) / gain


# -- attack constructors ----------------------------------------------------

def _is_clique(g: DirectedGraph) -> bool:
    return (g.num_edges == g.n * (g.n - 1)
            and bool((g.out_degrees == g.n - 1).all())
            and not any(g.has_edge(v, v) for v in range(g.n)))


def attack_clique_selfloop(base: DirectedGraph, trusted,
                           cost: CostFunction) -> SpamScenario:
    """Buy the cheapest vertex of a clique and strand it on a self-loop."""
    ts = frozenset(int(t) for t in trusted)
    if not _is_clique(base):
        raise InvalidBase("base graph is not a bidirectional clique")
    if len(ts) != 1:
        raise InvalidBase("attack expects a single trusted vertex")
    candidates = [v for v in range(base.n) if v not in ts]
    target = min(candidates, key=lambda v: (cost.values[v], v))
    src, dst = base.edge_array()
    keep = src != target
    edges = np.column_stack([src[keep], dst[keep]])
    edges = np.vstack([edges, [target, target]])
    return SpamScenario(base=base, trusted=ts, purchased=frozenset({target}),
                        spam_graph=build_graph(base.n, edges))


def attack_duplicate(base: DirectedGraph,
                     trusted=frozenset({0})) -> SpamScenario:
    """Free attack: append a disjoint copy of the whole graph."""
    src, dst = base.edge_array()
    edges = np.vstack([np.column_stack([src, dst]),
                       np.column_stack([src + base.n, dst + base.n])])
    return SpamScenario(base=base, trusted=frozenset(trusted),
                        purchased=frozenset(),
                        spam_graph=build_graph(2 * base.n, edges))


def attack_sink_farm(base: DirectedGraph, trusted, v: int,
                     m: int) -> SpamScenario:
    """Buy v and redirect it into a ring of m new spam vertices.

    The ring keeps the walk inside the farm until the next reset while
    costing only m edges.
    """
    ts = frozenset(int(t) for t in trusted)
    v = int(v)
    if v in ts:
        raise TrustedPurchase(f"vertex {v} is trusted")
    if m < 1:
        raise ValueError(f"farm needs at least one vertex, got {m}")
    src, dst = base.edge_array()
    keep = src != v
    edges = [(int(a), int(b)) for a, b in zip(src[keep], dst[keep])]
    farm = range(base.n, base.n + m)
    edges.extend((v, s) for s in farm)
    edges.extend((s, base.n + (s - base.n + 1) % m) for s in farm)
    return SpamScenario(base=base, trusted=ts, purchased=frozenset({v}),
                        spam_graph=build_graph(base.n + m, edges))


# -- scenario files ---------------------------------------------------------

def load_scenario(path: str | Path) -> SpamScenario:
    """Load a scenario JSON; edge-list paths resolve relative to it."""
    path = Path(path)
    with open(path) as fh:
        data = json.load(fh)
    root = path.parent
    base = load_edge_list(root / data["base"])
    spam = load_edge_list(root / data["spam_graph"])
    return SpamScenario(base=base,
                        trusted=frozenset(int(t) for t in data["trusted"]),
                        purchased=frozenset(int(p) for p in data["purchased"]),
                        spam_graph=spam)


def save_scenario(scenario: SpamScenario, path: str | Path,
                  base_name: str = "base.el",
                  spam_name: str = "spam.el") -> None:
    """Write a scenario JSON plus its two edge-list files."""
    path = Path(path)
    root = path.parent
    save_edge_list(scenario.base, root / base_name)
    save_edge_list(scenario.spam_graph, root / spam_name)
    payload = {
        "base": base_name,
        "spam_graph": spam_name,
        "trusted": sorted(scenario.trusted),
        "purchased": sorted(scenario.purchased),
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
