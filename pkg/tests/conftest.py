import numpy as np
import pytest

from minppr import build_graph, clique


def stationary_dense(g):
    """Independent stationary-distribution oracle: dense least squares on
    p(M - I) = 0 with the normalization row appended."""
    m = g.transition_matrix().toarray()
    a = np.vstack([m.T - np.eye(g.n), np.ones(g.n)])
    b = np.zeros(g.n + 1)
    b[-1] = 1.0
    sol, *_ = np.linalg.lstsq(a, b, rcond=None)
    return sol


def pagerank_dense(g, reset, eps):
    """Independent PageRank oracle: direct linear solve of
    p (I - (1-eps) M) = eps R."""
    m = g.transition_matrix().toarray()
    a = np.eye(g.n) - (1.0 - eps) * m
    return np.linalg.solve(a.T, eps * np.asarray(reset, dtype=float))


@pytest.fixture
def three_cycle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def bidi_triangle():
    return clique(3)


@pytest.fixture
def edge_graph():
    # single edge 0 -> 1; the sink convention self-loops vertex 1
    return build_graph(2, [(0, 1)])
