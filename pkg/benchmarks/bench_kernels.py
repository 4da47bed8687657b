"""Timing comparison of the compiled and pure-python walk kernels.

Runs the three hot operations (single step, PageRank power iteration,
lazy stationary iteration) on a seeded random graph with both backends
and prints a table. Usage:

    python benchmarks/bench_kernels.py --n 100000 --d 8 --eps 0.1
"""

import argparse
import time

import numpy as np

from minppr import _pykernel
from minppr.families import random_ergodic_graph
from minppr.rank import uniform_vector

try:
    from minppr import _ckernel
except ImportError:
    _ckernel = None


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_large(backends, args):
    """Single solve on one large graph: raw sparse-matvec throughput."""
    g = random_ergodic_graph(args.n, args.d, args.seed)
    weights = g.inv_out_degrees[g.in_indices]
    p0 = uniform_vector(g.n)
    reset = np.random.default_rng(args.seed).dirichlet(np.ones(g.n))

    print(f"\nlarge graph: n={g.n}, m={g.num_edges}, eps={args.eps}")
    print(f"{'backend':<10} {'step':>10} {'pagerank':>10} {'stationary':>11}")
    results = {}
    for name, mod in backends.items():
        stepper = mod.Stepper(g.n, g.in_indptr, g.in_indices, weights)
        t_step = time_call(lambda: stepper.step(p0), args.repeat)
        t_pr = time_call(
            lambda: stepper.pagerank(reset, args.eps, 1e-13, 10_000),
            args.repeat)
        t_lazy = time_call(
            lambda: stepper.lazy_stationary(p0, 1e-13, 100_000),
            args.repeat)
        results[name] = (t_step, t_pr, t_lazy)
        print(f"{name:<10} {t_step:>9.4f}s {t_pr:>9.4f}s {t_lazy:>10.4f}s")
    return results


def bench_small_batch(backends, args):
    """Many solves on small graphs: the verification-suite workload,
    where per-call overhead dominates."""
    graphs = [random_ergodic_graph(args.small_n, 3, seed)
              for seed in range(20)]
    rng = np.random.default_rng(args.seed)
    resets = [rng.dirichlet(np.ones(args.small_n))
              for _ in range(args.small_solves)]

    print(f"\nsmall batch: {args.small_solves} pagerank solves on "
          f"n={args.small_n} graphs")
    print(f"{'backend':<10} {'total':>10}")
    results = {}
    for name, mod in backends.items():
        steppers = [mod.Stepper(g.n, g.in_indptr, g.in_indices,
                                g.inv_out_degrees[g.in_indices])
                    for g in graphs]

        def solve_all():
            for i, reset in enumerate(resets):
                steppers[i % len(steppers)].pagerank(reset, args.eps,
                                                     1e-13, 10_000)

        total = time_call(solve_all, 1)
        results[name] = (total,)
        print(f"{name:<10} {total:>9.4f}s")
    return results


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=100_000)
    parser.add_argument("--d", type=int, default=8)
    parser.add_argument("--eps", type=float, default=0.1)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--small-n", type=int, default=50)
    parser.add_argument("--small-solves", type=int, default=2000)
    args = parser.parse_args()

    backends = {"python": _pykernel}
    if _ckernel is not None:
        backends["compiled"] = _ckernel
    else:
        print("compiled kernel not built; only the fallback will be timed")

    for label, results in (("large", bench_large(backends, args)),
                           ("small-batch", bench_small_batch(backends, args))):
        if len(results) == 2:
            ratios = ", ".join(f"{a / b:.2f}x" for a, b in
                               zip(results["python"], results["compiled"]))
            print(f"compiled speedup ({label}): {ratios}")


if __name__ == "__main__":
    main()
