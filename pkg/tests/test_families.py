import numpy as np
import pytest

from minppr import (DistortionParams, GeneratorSpec, MixingQuery, ResetModel,
                    clique, cycle, distortion, invert_reset, is_ergodic,
                    median_counterexample, median_rank, mixing_time, pagerank,
                    path_inflation, point_mass, random_ergodic_graph,
                    reference_rank, uniform_vector, upr_bad_family,
                    upr_bad_reference_rank)
from minppr.errors import MissingEdge

from conftest import stationary_dense


def test_clique_structure():
    g = clique(3)
    assert g.num_edges == 6
    assert not any(g.has_edge(v, v) for v in range(3))
    with pytest.raises(ValueError):
        clique(1)


def test_clique_reference_uniform_and_fast():
    g = clique(10)
    ref = reference_rank(g)
    assert np.abs(ref - 0.1).max() < 1e-13
    assert mixing_time(g, MixingQuery.worst_case(), ref) == 1


def test_cycle_structure():
    g = cycle(4)
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert sorted(cycle(1).edges()) == [(0, 0)]


def test_upr_bad_family_structure():
    g = upr_bad_family(4)
    expected = sorted([(0, 1), (1, 2)]                    # chain
                      + [(2, s) for s in (4, 5, 6, 7)]    # fan to hubs
                      + [(s, 3) for s in (4, 5, 6, 7)]    # hubs to tail
                      + [(i, 0) for i in range(4)])       # returns
    assert sorted(g.edges()) == expected
    with pytest.raises(ValueError):
        upr_bad_family(2)


def test_upr_bad_family_closed_form():
    for k in range(4, 21):
        g = upr_bad_family(k)
        closed = upr_bad_reference_rank(k)
        assert np.abs(reference_rank(g) - closed).max() < 1e-10
    # spot-check the formula against the dense oracle too
    assert np.abs(upr_bad_reference_rank(7)
                  - stationary_dense(upr_bad_family(7))).max() < 1e-12


def test_upr_bad_family_distorts_uniform_reset():
    k, eps = 20, 0.1
    g = upr_bad_family(k)
    ref = reference_rank(g)
    upr = pagerank(g, ResetModel(uniform_vector(g.n), eps))
    report = distortion(upr, g, DistortionParams(1.0), ref)
    assert report.graph_distortion >= 0.5 * eps * (1 - eps) * g.n
    assert mixing_time(g, MixingQuery.worst_case(), ref) <= 4


def test_median_counterexample_ppr_closed_forms():
    for ell in range(1, 7):
        k = 2 * ell + 1
        g = median_counterexample(ell)
        y1, y2 = 2 * k, 2 * k + 1
        for eps in (0.1, 0.5):
            x0 = pagerank(g, ResetModel(point_mass(g.n, 0), eps))
            targets = [k + j for j in range(ell + 1)]
            rest = [k + j for j in range(ell + 1, k)]
            assert np.abs(x0[targets] - eps * (1 - eps) / (ell + 1)).max() \
                < 1e-10
            assert np.abs(x0[rest]).max() < 1e-15
            assert abs(x0[y1] - eps * (1 - eps) ** 2) < 1e-10
            assert abs(x0[0] - eps) < 1e-10
            assert abs(x0[y2] - (1 - eps) ** 3) < 1e-10


def test_median_counterexample_small_case_value():
    g = median_counterexample(1)
    x0 = pagerank(g, ResetModel(point_mass(g.n, 0), 0.5))
    assert abs(x0[2 * 3] - 0.125) < 1e-12  # funnel vertex at eps=1/2


def test_median_counterexample_negativity_across_eta_grid():
    ell, eps = 5, 0.1
    k = 2 * ell + 1
    g = median_counterexample(ell)
    pprs = [pagerank(g, ResetModel(point_mass(g.n, i), eps))
            for i in range(k)]
    med = median_rank(pprs)
    y1 = 2 * k
    for step in range(1, 11):
        eta = 0.05 * step
        assert invert_reset(g, med, eta)[y1] < -1e-12
    with pytest.raises(ValueError):
        median_counterexample(0)


def test_path_inflation_structure():
    g = cycle(3)
    inflated = path_inflation(g, (0, 1), 2)
    assert sorted(inflated.edges()) == sorted(
        [(0, 3), (0, 4), (3, 1), (4, 1), (1, 2), (2, 0)])
    with pytest.raises(MissingEdge):
        path_inflation(g, (0, 2), 1)


def test_path_inflation_single_relay_keeps_connectivity():
    g = cycle(3)
    inflated = path_inflation(g, (0, 1), 1)
    # still one essential class: the reference rank exists
    ref = reference_rank(inflated)
    assert abs(ref.sum() - 1.0) < 1e-12


def test_path_inflation_pumps_uniform_reset_rank():
    base = clique(3)
    eps = 0.1
    values = []
    for m in (1, 2, 4, 8, 16):
        g = path_inflation(base, (0, 1), m)
        reference_rank(g)  # stays defined (unique essential class)
        upr = pagerank(g, ResetModel(uniform_vector(g.n), eps))
        values.append(upr[1])
    assert all(b > a for a, b in zip(values, values[1:]))


def test_random_ergodic_graph_properties():
    a = random_ergodic_graph(50, 4, seed=11)
    b = random_ergodic_graph(50, 4, seed=11)
    assert sorted(a.edges()) == sorted(b.edges())
    assert is_ergodic(a)
    c = random_ergodic_graph(50, 4, seed=12)
    assert sorted(a.edges()) != sorted(c.edges())
    with pytest.raises(ValueError):
        random_ergodic_graph(5, 5, seed=0)
    with pytest.raises(ValueError):
        random_ergodic_graph(1, 1, seed=0)


def test_generator_spec_round_trip(tmp_path):
    spec = GeneratorSpec(family="randomergodic",
                         params={"n": 30, "d": 3, "seed": 9})
    path = tmp_path / "spec.json"
    spec.to_json(path)
    back = GeneratorSpec.from_json(path)
    assert back == spec
    g = back.build()
    assert g.n == 30
    with pytest.raises(ValueError):
        GeneratorSpec(family="nosuch")
