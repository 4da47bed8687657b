import importlib.util

import numpy as np
import pytest

from minppr import _pykernel, backend_name
from minppr.families import random_ergodic_graph
from minppr.rank import uniform_vector

HAVE_COMPILED = importlib.util.find_spec("minppr._ckernel") is not None


def _steppers(g):
    from minppr import _ckernel
    weights = g.inv_out_degrees[g.in_indices]
    compiled = _ckernel.Stepper(g.n, g.in_indptr, g.in_indices, weights)
    pure = _pykernel.Stepper(g.n, g.in_indptr, g.in_indices, weights)
    return compiled, pure


def test_backend_reports_a_name():
    assert backend_name() in ("compiled", "python")


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_backends_agree_on_step():
    rng = np.random.default_rng(0)
    for seed in range(5):
        g = random_ergodic_graph(int(rng.integers(5, 80)), 3, seed=seed)
        compiled, pure = _steppers(g)
        p = rng.dirichlet(np.ones(g.n))
        assert np.abs(compiled.step(p) - pure.step(p)).max() < 1e-14

        batch = rng.dirichlet(np.ones(g.n), size=7)
        assert np.abs(compiled.step_many(batch)
                      - pure.step_many(batch)).max() < 1e-14


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_backends_agree_on_pagerank():
    rng = np.random.default_rng(1)
    for seed in range(5):
        g = random_ergodic_graph(40, 3, seed=seed)
        compiled, pure = _steppers(g)
        reset = rng.dirichlet(np.ones(g.n))
        eps = float(rng.uniform(0.05, 0.5))
        a, _, da = compiled.pagerank(reset, eps, 1e-13, 100_000)
        b, _, db = pure.pagerank(reset, eps, 1e-13, 100_000)
        assert da <= 1e-13 and db <= 1e-13
        assert np.abs(a - b).max() < 1e-12


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_backends_agree_on_stationary():
    for seed in range(5):
        g = random_ergodic_graph(40, 3, seed=seed)
        compiled, pure = _steppers(g)
        p0 = uniform_vector(g.n)
        a, _, _ = compiled.lazy_stationary(p0, 1e-13, 1_000_000)
        b, _, _ = pure.lazy_stationary(p0, 1e-13, 1_000_000)
        assert np.abs(a - b).max() < 1e-12


def test_stepper_is_cached_per_graph():
    g = random_ergodic_graph(10, 2, seed=0)
    assert g.stepper() is g.stepper()


def test_kernel_iteration_caps_are_honored():
    g = random_ergodic_graph(30, 3, seed=6)
    weights = g.inv_out_degrees[g.in_indices]
    stepper = _pykernel.Stepper(g.n, g.in_indptr, g.in_indices, weights)
    reset = uniform_vector(g.n)
    _, iters, delta = stepper.pagerank(reset, 0.01, 0.0, 5)
    assert iters == 5 and delta > 0.0
