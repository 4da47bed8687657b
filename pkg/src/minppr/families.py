"""Explicit graph families and desk-scale random generators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import MissingEdge
from .graph import DirectedGraph, build_graph


def clique(n: int) -> DirectedGraph:
    """Bidirectional clique on n vertices (no self-loops)."""
    if n < 2:
        raise ValueError(f"clique needs at least 2 vertices, got {n}")
    src = np.repeat(np.arange(n), n)
    dst = np.tile(np.arange(n), n)
    keep = src != dst
    return build_graph(n, np.column_stack([src[keep], dst[keep]]))


def cycle(n: int) -> DirectedGraph:
    """Directed cycle on n vertices (a self-loop when n = 1)."""
    if n < 1:
        raise ValueError(f"cycle needs at least 1 vertex, got {n}")
    verts = np.arange(n)
    return build_graph(n, np.column_stack([verts, (verts + 1) % n]))


def upr_bad_family(k: int) -> DirectedGraph:
    """2k-vertex family on which uniform-reset PageRank distorts badly.

    Vertices 0..k-1 form a chain whose stationary mass halves at each
    hop, all of them link back to vertex 0; vertex k-2 fans out to the k
    hub vertices (ids k..2k-1), which all feed vertex k-1. The hubs soak
    up half of every uniform reset and funnel it into the chain's tail,
    whose true stationary rank is exponentially small.
    """
    if k < 3:
        raise ValueError(f"family needs k >= 3, got {k}")
    edges: list[tuple[int, int]] = []
    # chain stops one short of the tail; only the hubs feed vertex k-1
    edges.extend((i, i + 1) for i in range(k - 2))
    hub = np.arange(k, 2 * k)
    edges.extend((k - 2, int(s)) for s in hub)
    edges.extend((int(s), k - 1) for s in hub)
    edges.extend((i, 0) for i in range(k))
    return build_graph(2 * k, edges)


def upr_bad_reference_rank(k: int) -> np.ndarray:
    """Closed-form stationary distribution of upr_bad_family(k).

    With a = 1/(2 + (k-1)/((k+1) 2^(k-2))): chain vertex i (0-based,
    i <= k-2) has mass a/2^i, each hub has a/((k+1) 2^(k-2)), and the
    tail vertex k-1 has k times the hub mass.
    """
    if k < 3:
        raise ValueError(f"family needs k >= 3, got {k}")
    scale = (k + 1) * 2.0 ** (k - 2)
    a = 1.0 / (2.0 + (k - 1) / scale)
    out = np.empty(2 * k, dtype=np.float64)
    for i in range(k - 1):
        out[i] = a / 2.0 ** i
    out[k - 1] = k * a / scale
    out[k:] = a / scale
    return out


def median_counterexample(ell: int) -> DirectedGraph:
    """Graph whose PPR medians escape the original reset probability.

    With k = 2*ell+1: source vertices u_0..u_{k-1} (ids 0..k-1) each fan
    out to ell+1 consecutive middle vertices v_j (ids k..2k-1, indices
    cyclic); every v_j feeds y1 (id 2k), y1 feeds y2 (id 2k+1), and y2
    terminates in a self-loop. The tail after y1 is the minimal structure
    under which a walk started at any u_i visits each v_j and y1 at most
    once, pinning the personalized PageRank values in closed form.
    """
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    k = 2 * ell + 1
    y1, y2 = 2 * k, 2 * k + 1
    edges: list[tuple[int, int]] = []
    for i in range(k):
        edges.extend((i, k + (i + j) % k) for j in range(ell + 1))
    edges.extend((k + j, y1) for j in range(k))
    edges.append((y1, y2))
    # y2 is a sink; the build step gives it its self-loop
    return build_graph(2 * k + 2, edges)


def path_inflation(g: DirectedGraph, edge: tuple[int, int],
                   m: int) -> DirectedGraph:
    """Replace an edge by m internally disjoint two-edge relay paths."""
    u, v = int(edge[0]), int(edge[1])
    if not g.has_edge(u, v):
        raise MissingEdge(f"edge ({u}, {v}) not present")
    if m < 1:
        raise ValueError(f"need at least one relay path, got {m}")
    edges = [(a, b) for a, b in
             zip(*(arr.tolist() for arr in g.edge_array()))
             if not (a == u and b == v)]
    relays = range(g.n, g.n + m)
    edges.extend((u, w) for w in relays)
    edges.extend((w, v) for w in relays)
    return build_graph(g.n + m, edges)


def random_ergodic_graph(n: int, d: int, seed: int) -> DirectedGraph:
    """Seeded random digraph guaranteed ergodic.

    Each vertex gets d out-edges to distinct uniform targets, on top of a
    Hamiltonian cycle through a random permutation (strong connectivity)
    and a self-loop at vertex 0 (aperiodicity). Deterministic for a fixed
    seed.
    """
    if n < 2 or not 1 <= d < n:
        raise ValueError(f"need n >= 2 and 1 <= d < n, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    edges = [(int(perm[i]), int(perm[(i + 1) % n])) for i in range(n)]
    for u in range(n):
        for t in rng.choice(n, size=d, replace=False):
            edges.append((u, int(t)))
    edges.append((0, 0))
    return build_graph(n, edges)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of a generated graph, for the JSON sidecar."""

    family: str
    params: dict = field(default_factory=dict)

    _FAMILIES = ("clique", "cycle", "uprbad", "medianx", "pathinflation",
                 "randomergodic")

    def __post_init__(self):
        if self.family not in self._FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def to_json(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            json.dump({"family": self.family, "params": self.params},
                      fh, indent=2, sort_keys=True)
            fh.write("\n")

    @classmethod
    def from_json(cls, path: str | Path) -> "GeneratorSpec":
        with open(path) as fh:
            data = json.load(fh)
        return cls(family=data["family"], params=data.get("params", {}))

    def build(self, base: DirectedGraph | None = None) -> DirectedGraph:
        p = self.params
        if self.family == "clique":
            return clique(int(p["n"]))
        if self.family == "cycle":
            return cycle(int(p["n"]))
        if self.family == "uprbad":
            return upr_bad_family(int(p["k"]))
        if self.family == "medianx":
            return median_counterexample(int(p["ell"]))
        if self.family == "randomergodic":
            return random_ergodic_graph(int(p["n"]), int(p["d"]),
                                        int(p["seed"]))
        if base is None:
            raise ValueError("path inflation needs a base graph")
        return path_inflation(base, tuple(p["edge"]), int(p["m"]))
