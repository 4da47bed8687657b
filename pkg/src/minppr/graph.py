"""Directed-graph representation, reachability and coherence predicates.

Graphs are simple digraphs stored in CSR form in both directions. The
sink convention is applied at construction: any vertex with no out-edge
receives a self-loop, so every vertex has out-degree at least one.
Instances are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from . import kernels

Edge = tuple[int, int]


class DirectedGraph:
    """Simple digraph with out- and in-adjacency in CSR form.

    Use :func:`build_graph` rather than constructing directly; it
    deduplicates edges and applies the sink convention.
    """

    __slots__ = ("n", "out_indptr", "out_indices", "in_indptr", "in_indices",
                 "_inv_out_degree", "_stepper")

    def __init__(self, n: int, out_indptr, out_indices, in_indptr, in_indices):
        self.n = int(n)
        self.out_indptr = out_indptr
        self.out_indices = out_indices
        self.in_indptr = in_indptr
        self.in_indices = in_indices
        self._inv_out_degree = 1.0 / np.diff(out_indptr).astype(np.float64)
        self._stepper = None

    # -- basic accessors -------------------------------------------------

    @property
    def num_edges(self) -> int:
        return int(self.out_indices.size)

    @property
    def out_degrees(self) -> np.ndarray:
        return np.diff(self.out_indptr)

    @property
    def in_degrees(self) -> np.ndarray:
        return np.diff(self.in_indptr)

    @property
    def inv_out_degrees(self) -> np.ndarray:
        return self._inv_out_degree

    def out_neighbors(self, v: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[v]:self.out_indptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        return self.in_indices[self.in_indptr[v]:self.in_indptr[v + 1]]

    @property
    def out_adj(self) -> list[np.ndarray]:
        """Per-vertex sorted out-neighbor lists."""
        return [self.out_neighbors(v) for v in range(self.n)]

    @property
    def in_adj(self) -> list[np.ndarray]:
        """Per-vertex sorted in-neighbor lists (transpose of out_adj)."""
        return [self.in_neighbors(v) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.out_neighbors(u)
        i = np.searchsorted(nbrs, v)
        return bool(i < nbrs.size and nbrs[i] == v)

    def edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            for v in self.out_neighbors(u):
                yield (u, int(v))

    def edge_array(self) -> tuple[np.ndarray, np.ndarray]:
        """All edges as parallel (source, target) arrays."""
        src = np.repeat(np.arange(self.n, dtype=self.out_indices.dtype),
                        self.out_degrees)
        return src, self.out_indices

    def stepper(self):
        """Walk kernel for this graph (built lazily, cached)."""
        if self._stepper is None:
            weights = self._inv_out_degree[self.in_indices]
            self._stepper = kernels.make_stepper(
                self.n, self.in_indptr, self.in_indices, weights)
        return self._stepper

    def transition_matrix(self) -> sp.csr_matrix:
        """Uniform-walk transition matrix M with M[u,v] = 1/d_out(u)."""
        src, dst = self.edge_array()
        data = self._inv_out_degree[src]
        return sp.csr_matrix((data, (src, dst)), shape=(self.n, self.n))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.num_edges})"


def _csr_from_pairs(n: int, src: np.ndarray, dst: np.ndarray):
    """CSR arrays from edge pairs; pairs must be unique."""
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int32)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr.astype(np.int32), dst.astype(np.int32)


def build_graph(n: int, edges: Iterable[Edge]) -> DirectedGraph:
    """Build a simple digraph on vertices 0..n-1.

    Duplicate pairs are collapsed and every vertex left without an
    out-edge receives a self-loop. Raises ValueError when an endpoint is
    outside [0, n).
    """
    if n <= 0:
        raise ValueError(f"vertex count must be positive, got {n}")
    pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                       dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValueError("edges must be (u, v) pairs")
    if pairs.size and (pairs.min() < 0 or pairs.max() >= n):
        raise ValueError("edge endpoint out of range [0, n)")

    keys = np.unique(pairs[:, 0] * n + pairs[:, 1])
    src = (keys // n).astype(np.int64)
    dst = (keys % n).astype(np.int64)

    out_deg = np.bincount(src, minlength=n)
    sinks = np.flatnonzero(out_deg == 0)
    if sinks.size:
        src = np.concatenate([src, sinks])
        dst = np.concatenate([dst, sinks])

    out_indptr, out_indices = _csr_from_pairs(n, src, dst)
    in_indptr, in_indices = _csr_from_pairs(n, dst, src)
    return DirectedGraph(n, out_indptr, out_indices, in_indptr, in_indices)


# -- reachability ---------------------------------------------------------

def _reachable_from(g: DirectedGraph, start: int) -> np.ndarray:
    """Boolean mask of vertices reachable from ``start`` (start included)."""
    seen = np.zeros(g.n, dtype=bool)
    seen[start] = True
    frontier = [start]
    while frontier:
        nbrs = np.concatenate([g.out_neighbors(u) for u in frontier])
        nxt = np.unique(nbrs)
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt.tolist()
    return seen


def _bfs_levels(g: DirectedGraph, start: int) -> np.ndarray:
    level = np.full(g.n, -1, dtype=np.int64)
    level[start] = 0
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nbrs = np.concatenate([g.out_neighbors(u) for u in frontier])
        nxt = np.unique(nbrs)
        nxt = nxt[level[nxt] < 0]
        level[nxt] = depth
        frontier = nxt.tolist()
    return level


def strong_component_labels(g: DirectedGraph) -> tuple[int, np.ndarray]:
    """(component count, per-vertex label) for strong connectivity."""
    adj = sp.csr_matrix(
        (np.ones(g.num_edges, dtype=np.int8), g.out_indices, g.out_indptr),
        shape=(g.n, g.n))
    return connected_components(adj, directed=True, connection="strong")


def is_ergodic(g: DirectedGraph) -> bool:
    """True iff the uniform walk on g is ergodic.

    Requires strong connectivity and aperiodicity; the period is the gcd
    of level[u] + 1 - level[v] over all edges, with levels from a BFS.
    """
    ncomp, _ = strong_component_labels(g)
    if ncomp != 1:
        return False
    level = _bfs_levels(g, 0)
    src, dst = g.edge_array()
    diffs = level[src] + 1 - level[dst]
    return int(np.gcd.reduce(np.abs(diffs))) == 1


def is_coherent(g: DirectedGraph, centers: Iterable[int]) -> bool:
    """True iff some vertex is reachable from every center.

    The empty set is not coherent.
    """
    centers = sorted(set(int(c) for c in centers))
    if not centers:
        return False
    counts = np.zeros(g.n, dtype=np.int64)
    for c in centers:
        counts += _reachable_from(g, c)
    return bool(counts.max() == len(centers))


def max_coherent_subset(g: DirectedGraph, centers: Iterable[int]) -> list[int]:
    """Largest coherent subset of the centers, as a sorted id list.

    Every center reaching the vertex reached by the most centers is kept;
    ties between witness vertices break toward the smallest id. Any two
    coherent subsets could be merged through their witnesses, so counting
    gives the exact maximum.
    """
    centers = sorted(set(int(c) for c in centers))
    if not centers:
        raise ValueError("center set must be nonempty")
    reach = np.stack([_reachable_from(g, c) for c in centers])
    counts = reach.sum(axis=0)
    witness = int(np.argmax(counts))  # argmax takes the smallest id on ties
    return [c for c, ok in zip(centers, reach[:, witness]) if ok]


# -- edge-list text format ------------------------------------------------
#
# First non-comment line: "n m"; then m lines "u v" (0-based). Lines
# starting with '#' are ignored. The sink convention is applied on load
# and convention self-loops are stripped on save.

def load_edge_list(path: str | Path) -> DirectedGraph:
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if header is None:
                if len(parts) != 2:
                    raise ValueError(f"bad header line: {line!r}")
                header = (int(parts[0]), int(parts[1]))
                continue
            if len(parts) != 2:
                raise ValueError(f"bad edge line: {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    if header is None:
        raise ValueError("empty edge-list file")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def stored_edges(g: DirectedGraph) -> list[Edge]:
    """Edges with convention self-loops (lone (v,v) out-edge) stripped."""
    out = []
    for u in range(g.n):
        nbrs = g.out_neighbors(u)
        if nbrs.size == 1 and nbrs[0] == u:
            continue
        out.extend((u, int(v)) for v in nbrs)
    return out


def save_edge_list(g: DirectedGraph, path: str | Path) -> None:
    edges = stored_edges(g)
    with open(path, "w") as fh:
        fh.write(f"{g.n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")
