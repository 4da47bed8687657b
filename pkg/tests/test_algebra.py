import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minppr import (ResetModel, build_graph, clique, invert_reset,
                    is_pagerank, is_pagerank_at, median_counterexample,
                    median_rank, min_ppr, min_rank, pagerank, point_mass,
                    random_ergodic_graph, recover_reset_probability,
                    t_min_ppr, t_min_ppr_hard, t_ppr, uniform_vector)
from minppr.errors import (AllZeroMedian, AllZeroMin, EmptyTrustedSet,
                           IncoherentCenters, InconsistentReset)


def test_invert_reset_uniform_on_cycle(three_cycle):
    out = invert_reset(three_cycle, uniform_vector(3), 0.3)
    assert np.abs(out - 1 / 3).max() < 1e-15


def test_invert_reset_round_trip():
    rng = np.random.default_rng(1)
    for seed in range(5):
        n = int(rng.integers(5, 40))
        g = random_ergodic_graph(n, 3, seed=seed)
        reset = rng.dirichlet(np.ones(n))
        eps = float(rng.uniform(0.05, 0.5))
        p = pagerank(g, ResetModel(reset, eps))
        assert np.abs(invert_reset(g, p, eps) - reset).max() <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_invert_reset_always_sums_to_one(data):
    n = data.draw(st.integers(min_value=2, max_value=8))
    edges = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=2 * n))
    g = build_graph(n, edges)
    weights = data.draw(st.lists(st.floats(0.01, 1.0), min_size=n,
                                 max_size=n))
    p = np.array(weights) / np.sum(weights)
    eps = data.draw(st.floats(0.01, 0.99))
    assert abs(invert_reset(g, p, eps).sum() - 1.0) < 1e-9


def test_is_pagerank_at_examples(three_cycle):
    g = random_ergodic_graph(12, 3, seed=0)
    reset = np.random.default_rng(0).dirichlet(np.ones(12))
    p = pagerank(g, ResetModel(reset, 0.25))
    assert is_pagerank_at(g, p, 0.25)

    # min of two personalized PageRanks keeps the reset probability
    a = pagerank(g, ResetModel(point_mass(12, 0), 0.25))
    b = pagerank(g, ResetModel(point_mass(12, 5), 0.25))
    assert is_pagerank_at(g, min_rank([a, b]), 0.25)


def test_median_counterexample_not_pagerank_at_small_eps():
    g = median_counterexample(5)
    k = 11
    pprs = [pagerank(g, ResetModel(point_mass(g.n, i), 0.3))
            for i in range(k)]
    med = median_rank(pprs)
    assert not is_pagerank_at(g, med, 0.3)
    y1 = 2 * k
    assert invert_reset(g, med, 0.3)[y1] < -1e-12


def test_is_pagerank_support_condition(edge_graph):
    ok, _ = is_pagerank(edge_graph, np.array([1.0, 0.0]))
    assert not ok

    flag, eps = is_pagerank(edge_graph, np.array([0.0, 1.0]))
    assert flag and eps == 0.5

    g = random_ergodic_graph(10, 3, seed=3)
    dense = np.random.default_rng(3).dirichlet(np.ones(10))
    flag, eps = is_pagerank(g, dense)
    assert flag
    assert is_pagerank_at(g, dense, eps)


def test_recover_reset_probability_round_trip():
    rng = np.random.default_rng(2)
    g = random_ergodic_graph(18, 3, seed=2)
    reset = rng.dirichlet(np.ones(18))
    p = pagerank(g, ResetModel(reset, 0.2))
    report = recover_reset_probability(g, p, reset)
    assert report.kind == "unique"
    assert abs(report.eps - 0.2) <= 1e-8
    assert np.abs(report.reset - reset).max() <= 1e-8


def test_recover_reset_probability_fixed_point(three_cycle):
    report = recover_reset_probability(three_cycle, uniform_vector(3),
                                       uniform_vector(3))
    assert report.kind == "fixed_point"
    assert np.allclose(report.reset, 1 / 3)


def test_recover_reset_probability_mismatch():
    rng = np.random.default_rng(4)
    g = random_ergodic_graph(15, 3, seed=4)
    p = pagerank(g, ResetModel(rng.dirichlet(np.ones(15)), 0.2))
    with pytest.raises(InconsistentReset):
        recover_reset_probability(g, p, rng.dirichlet(np.ones(15)))


def test_recover_reset_probability_infeasible_scale():
    # blending a PageRank with its own one-step image produces consistent
    # quotients at a pseudo reset probability of 1.5, which is infeasible
    g = random_ergodic_graph(15, 3, seed=5)
    p = pagerank(g, ResetModel(point_mass(15, 0), 0.3))
    pm = g.stepper().step(p)
    blended = (2 / 3) * p + (1 / 3) * pm
    report = recover_reset_probability(g, p, blended)
    assert report.kind == "none"
    assert abs(report.eps - 1.5) <= 1e-8


def test_min_rank_examples():
    out = min_rank([np.array([0.5, 0.5, 0.0]), np.array([0.0, 0.5, 0.5])])
    assert np.array_equal(out, [0.0, 1.0, 0.0])

    p = np.array([0.25, 0.75])
    assert np.array_equal(min_rank([p]), p)

    with pytest.raises(AllZeroMin):
        min_rank([np.array([1.0, 0.0]), np.array([0.0, 1.0])])


def test_median_rank_examples():
    out = median_rank([np.array([1.0, 0.0]), np.array([0.0, 1.0]),
                       np.array([0.5, 0.5])])
    assert np.array_equal(out, [0.5, 0.5])

    p = np.array([0.3, 0.7])
    assert np.array_equal(median_rank([p, p, p]), p)

    with pytest.raises(AllZeroMedian):
        median_rank([np.eye(3)[i] for i in range(3)])

    with pytest.raises(ValueError):
        median_rank([p, p])


def test_min_ppr_symmetry_and_singleton(bidi_triangle):
    out = min_ppr(bidi_triangle, {0, 1, 2}, 0.2)
    assert np.abs(out - 1 / 3).max() < 1e-13

    single = min_ppr(bidi_triangle, {1}, 0.2)
    direct = pagerank(bidi_triangle, ResetModel(point_mass(3, 1), 0.2))
    assert np.abs(single - direct).max() < 1e-15


def test_min_ppr_requires_coherence():
    disjoint = build_graph(2, [(0, 0), (1, 1)])
    with pytest.raises(IncoherentCenters):
        min_ppr(disjoint, {0, 1}, 0.2)


def test_min_ppr_is_closed():
    rng = np.random.default_rng(6)
    for seed in range(5):
        n = int(rng.integers(6, 30))
        g = random_ergodic_graph(n, 3, seed=seed)
        centers = rng.choice(n, size=3, replace=False)
        out = min_ppr(g, centers, 0.1)
        assert is_pagerank_at(g, out, 0.1)
        assert abs(out.sum() - 1.0) <= 1e-12
        assert out.min() >= 0


def test_t_ppr_examples(edge_graph):
    assert np.abs(t_ppr(edge_graph, {0}, 0.2) - [0.2, 0.8]).max() < 1e-12

    # the smallest trusted id is the center
    g = random_ergodic_graph(12, 3, seed=7)
    direct = pagerank(g, ResetModel(point_mass(12, 2), 0.2))
    assert np.array_equal(t_ppr(g, {5, 2, 9}, 0.2), direct)

    with pytest.raises(EmptyTrustedSet):
        t_ppr(g, set(), 0.2)


def test_t_ppr_self_looped_clique_value():
    # an 11-clique where vertex 10 traded its out-edges for a self-loop:
    # its trusted-PPR rank solves r = (1-e) r + (1-e)(1-r)/(n-1)
    n, eps = 11, 0.1
    base = clique(n)
    src, dst = base.edge_array()
    keep = src != 10
    edges = list(zip(src[keep].tolist(), dst[keep].tolist())) + [(10, 10)]
    g = build_graph(n, edges)
    expect = (1 - eps) / ((n - 1) * eps + 1 - eps)
    assert abs(t_ppr(g, {0}, eps)[10] - expect) < 1e-12


def test_t_min_ppr_behavior():
    g = random_ergodic_graph(20, 3, seed=8)
    trusted = {11, 3, 17, 5}
    out = t_min_ppr(g, trusted, 3, 0.15)
    assert np.array_equal(out, min_ppr(g, [3, 5, 11], 0.15))

    two_cycles = build_graph(6, [(0, 1), (1, 2), (2, 0),
                                 (3, 4), (4, 5), (5, 3)])
    out = t_min_ppr(two_cycles, {0, 3}, 2, 0.3)
    only = pagerank(two_cycles, ResetModel(point_mass(6, 0), 0.3))
    assert np.abs(out - only).max() < 1e-15

    single = t_min_ppr(g, {4}, 5, 0.15)
    assert np.abs(single - t_ppr(g, {4}, 0.15)).max() < 1e-15


def test_t_min_ppr_hard_symmetric_discard(bidi_triangle):
    out, report = t_min_ppr_hard(bidi_triangle, {0, 1, 2}, gamma=0.5,
                                 delta=2.0, k=2, eps=0.2)
    assert report.discarded == [2]
    assert report.kept == [0, 1]
    assert all(x == 0.0 for x in report.divergences.values())
    assert np.array_equal(out, min_ppr(bidi_triangle, {0, 1}, 0.2))


def test_t_min_ppr_hard_single_center():
    g = random_ergodic_graph(15, 3, seed=9)
    out, report = t_min_ppr_hard(g, {6}, gamma=0.1, delta=1.5, k=3, eps=0.2)
    assert report.discarded == []
    assert report.kept == [6]
    assert np.abs(out - t_ppr(g, {6}, 0.2)).max() < 1e-15


def test_t_min_ppr_hard_report_shape():
    g = random_ergodic_graph(25, 3, seed=10)
    trusted = set(range(9))
    k = 3
    out, report = t_min_ppr_hard(g, trusted, gamma=0.2, delta=1.0, k=k,
                                 eps=0.1)
    candidates = sorted(trusted)[:2 * k - 1]
    assert sorted(report.kept + report.discarded) == candidates
    assert len(report.discarded) == k - 1
    assert abs(out.sum() - 1.0) <= 1e-12
    payload = report.to_dict()
    assert set(payload) == {"medians", "divergences", "kept", "discarded",
                            "gamma", "delta", "threshold_empty"}
    assert payload["gamma"] == 0.2

    with pytest.raises(ValueError):
        t_min_ppr_hard(g, trusted, gamma=0.2, delta=0.5, k=k, eps=0.1)
    with pytest.raises(EmptyTrustedSet):
        t_min_ppr_hard(g, set(), gamma=0.2, delta=1.5, k=k, eps=0.1)
