"""Named verification suites behind the ``verify`` CLI subcommand.

Each suite checks one theorem-level claim at desk scale and reports one
trial per instance with a declared pass rule. Statistical suites state
their threshold up front (the underlying guarantees themselves carry
failure probability). All randomness in a suite flows from the single
seed it receives, so failures reproduce exactly.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .algebra import (invert_reset, is_pagerank, is_pagerank_at, median_rank,
                      min_ppr, min_rank, recover_reset_probability,
                      t_min_ppr, t_min_ppr_hard, t_ppr)
from .errors import InconsistentReset, UnknownSuite
from .families import (clique, median_counterexample, path_inflation,
                       random_ergodic_graph, upr_bad_family)
from .graph import build_graph, is_coherent, is_ergodic, max_coherent_subset
from .metrics import (DistortionParams, MixingQuery, distortion, entropy,
                      expected_mixing_time, mixing_time, tv_distance)
from .rank import (ResetModel, pagerank, pagerank_series_oracle, point_mass,
                   reference_rank, uniform_vector, walk_distribution)
from .spam import (CostFunction, SpamScenario, attack_clique_selfloop,
                   attack_duplicate, attack_sink_farm, minppr_cost, ppr_cost,
                   spam_gain, spam_ratio, validate_spam_graph)


@dataclass
class SuiteResult:
    suite: str
    seed: int
    pass_rule: str
    trials_run: int = 0
    trials_passed: int = 0
    verdict: str = "fail"
    seconds: float = 0.0
    diagnostics: list[dict] = field(default_factory=list)

    def record(self, ok: bool, **diag) -> None:
        self.trials_run += 1
        self.trials_passed += int(bool(ok))
        self.diagnostics.append({"ok": bool(ok), **diag})

    def finish(self, min_passed: int | None = None) -> "SuiteResult":
        need = self.trials_run if min_passed is None else min_passed
        self.verdict = "pass" if self.trials_passed >= need else "fail"
        return self

    def to_dict(self) -> dict:
        # wall-clock time stays off the artifact so reruns are byte-identical
        return {
            "suite": self.suite,
            "seed": self.seed,
            "pass_rule": self.pass_rule,
            "trials_run": self.trials_run,
            "trials_passed": self.trials_passed,
            "verdict": self.verdict,
            "diagnostics": self.diagnostics,
        }

    def to_json(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def _f(x) -> float:
    return float(x)


def _random_reset(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.dirichlet(np.ones(n))


# ---------------------------------------------------------------------------
# 1. strong closure of entrywise min under a shared reset probability

def _suite_min_closure(seed: int) -> SuiteResult:
    res = SuiteResult("min-closure", seed,
                      "all 200 trials: inverted reset of min-PPR >= -1e-9")
    rng = np.random.default_rng(seed)
    for _ in range(200):
        n = int(rng.integers(5, 51))
        d = int(rng.integers(2, min(6, n)))
        g = random_ergodic_graph(n, d, int(rng.integers(2 ** 31)))
        eps = float(rng.choice([0.05, 0.1, 0.3]))
        size = int(min(rng.choice([2, 3, 5]), n))
        centers = sorted(int(c) for c in rng.choice(n, size=size,
                                                    replace=False))
        structural = (is_ergodic(g) and is_coherent(g, centers)
                      and max_coherent_subset(g, centers) == centers)
        out = min_ppr(g, centers, eps)
        worst = _f(invert_reset(g, out, eps).min())
        ok = structural and worst >= -1e-9 and is_pagerank_at(g, out, eps)
        res.record(ok, n=n, d=d, eps=eps, centers=centers,
                   min_inverted_entry=worst)
    return res.finish()


# ---------------------------------------------------------------------------
# 2. median escapes the shared reset probability but stays a PageRank

def _suite_median_failure(seed: int) -> SuiteResult:
    res = SuiteResult("median-failure", seed,
                      "inverted reset negative at the funnel vertex for "
                      "every eta in 0.05..0.50; median still some PageRank; "
                      "min of the same PPRs stays closed")
    ell, eps = 5, 0.1
    k = 2 * ell + 1
    g = median_counterexample(ell)
    y1 = 2 * k
    pprs = [pagerank(g, ResetModel(point_mass(g.n, i), eps)) for i in range(k)]
    med = median_rank(pprs)
    for step in range(1, 11):
        eta = 0.05 * step
        value = _f(invert_reset(g, med, eta)[y1])
        res.record(value < -1e-12, eta=round(eta, 2),
                   inverted_at_funnel=value)
    weak, witness = is_pagerank(g, med)
    res.record(weak and witness is not None and witness > 0.5,
               check="weak-closure", witness_eps=witness)
    res.record(is_pagerank_at(g, min_rank(pprs), eps),
               check="min-stays-closed", eps=eps)
    return res.finish()


# ---------------------------------------------------------------------------
# 3. tightness of the trusted-PPR resistance bound on cliques

def _suite_clique_tightness(seed: int) -> SuiteResult:
    res = SuiteResult("clique-tightness", seed,
                      "gain and ratio match closed forms within 1e-9; "
                      "ratio inside [eps, eps(1+eta)/(1-eps)]")
    n, eps, eta = 1000, 0.1, 0.02
    g = clique(n)
    trusted = frozenset({0})
    cost = ppr_cost(g, trusted, eps)
    scenario = attack_clique_selfloop(g, trusted, cost)
    target = next(iter(scenario.purchased))

    gain = spam_gain(scenario, "tppr", eps)
    expected_gain = (1 - eps) / ((n - 1) * eps + 1 - eps)
    res.record(abs(gain - expected_gain) <= 1e-9, gain=gain,
               expected_gain=expected_gain)

    direct = _f(t_ppr(scenario.spam_graph, trusted, eps)[target])
    res.record(abs(direct - gain) <= 1e-12, check="gain-is-purchased-rank",
               rank_at_purchased=direct)

    ratio = spam_ratio(scenario, cost, "tppr", eps)
    expected_ratio = (1.0 / (n - 1)) / expected_gain
    lo, hi = eps, eps * (1 + eta) / (1 - eps)
    res.record(abs(ratio - expected_ratio) <= 1e-9 and lo <= ratio <= hi,
               ratio=ratio, expected_ratio=expected_ratio, lower=lo, upper=hi)

    res.record(validate_spam_graph(g, trusted, scenario.purchased,
                                   scenario.spam_graph),
               check="attack-admissible")
    return res.finish()


# ---------------------------------------------------------------------------
# 4. uniform-reset PageRank distorts the chain-and-hub family

def _suite_upr_distortion(seed: int) -> SuiteResult:
    res = SuiteResult("upr-distortion", seed,
                      "distortion >= eps(1-eps)n/2 at delta=1 and "
                      "worst-case mixing time <= 4")
    k, eps = 20, 0.1
    g = upr_bad_family(k)
    ref = reference_rank(g)
    upr = pagerank(g, ResetModel(uniform_vector(g.n), eps))
    report = distortion(upr, g, DistortionParams(1.0), ref)
    bound = 0.5 * eps * (1 - eps) * g.n
    res.record(report.graph_distortion >= bound,
               measured=report.graph_distortion, lower_bound=bound)
    tau = mixing_time(g, MixingQuery.worst_case(), ref)
    res.record(tau <= 4, mixing_time=tau)
    return res.finish()


# ---------------------------------------------------------------------------
# 5./6. shared instances: 50 fast-mixing graphs with matched reset draws

def _contraction_instances(seed: int):
    rng = np.random.default_rng(seed)
    log2n = math.log2(100)
    for _ in range(50):
        d = int(rng.integers(2, 6))
        g = random_ergodic_graph(100, d, int(rng.integers(2 ** 31)))
        ref = reference_rank(g)
        tau = mixing_time(g, MixingQuery.worst_case(), ref)
        eps = 1.0 / (2.0 * tau * (3.0 + log2n))
        resets = [_random_reset(rng, 100) for _ in range(20)]
        yield g, ref, tau, eps, resets


def _suite_contraction_bound(seed: int) -> SuiteResult:
    res = SuiteResult("contraction-bound", seed,
                      "every per-vertex contraction <= "
                      "1 + 2 eps tau (3+log2 n) + 1e-9")
    log2n = math.log2(100)
    for g, ref, tau, eps, resets in _contraction_instances(seed):
        bound = 1.0 + 2.0 * eps * tau * (3.0 + log2n) + 1e-9
        for reset in resets:
            p = pagerank(g, ResetModel(reset, eps))
            report = distortion(p, g, DistortionParams(1.0), ref)
            worst = _f(report.contraction.max())
            res.record(worst <= bound, tau=tau, eps=eps,
                       max_contraction=worst, bound=bound)
    return res.finish()


def _suite_tv_bound(seed: int) -> SuiteResult:
    res = SuiteResult("tv-bound", seed,
                      "tv(pagerank, reference) <= "
                      "eps tau(R) (3 + H(reference)) + 1e-9")
    for g, ref, tau, eps, resets in _contraction_instances(seed):
        h_ref = entropy(ref)
        for reset in resets:
            p = pagerank(g, ResetModel(reset, eps))
            tau_r = mixing_time(g, MixingQuery.from_distribution(reset), ref)
            bound = eps * tau_r * (3.0 + h_ref) + 1e-9
            measured = tv_distance(p, ref)
            res.record(measured <= bound, tau_r=tau_r, eps=eps,
                       tv=measured, bound=bound)
    return res.finish()


# ---------------------------------------------------------------------------
# 7. min-PPR distortion with centers sampled from the reference rank

def _suite_minppr_distortion(seed: int) -> SuiteResult:
    res = SuiteResult("minppr-distortion", seed,
                      ">= 90 of 100 trials have distortion <= "
                      "1 + 210 eps tau log2 n (claim itself fails with "
                      "probability <= 4^-6 n ~ 0.049)")
    rng = np.random.default_rng(seed)
    n, k = 200, 6
    g = random_ergodic_graph(n, 3, int(rng.integers(2 ** 31)))
    ref = reference_rank(g)
    tau = mixing_time(g, MixingQuery.worst_case(), ref)
    log2n = math.log2(n)
    eps = 0.5 / (210.0 * tau * log2n)
    bound = 1.0 + 210.0 * eps * tau * log2n
    params = DistortionParams(1.0)
    for _ in range(100):
        centers = set(int(c) for c in
                      rng.choice(n, size=k, replace=True, p=ref))
        out = min_ppr(g, centers, eps)
        measured = distortion(out, g, params, ref).graph_distortion
        res.record(measured <= bound, centers=sorted(centers),
                   distortion=measured, bound=bound, eps=eps, tau=tau)
    return res.finish(min_passed=90)


# ---------------------------------------------------------------------------
# 8. geometric-series oracle agrees with the power-iteration solver

def _suite_series_oracle(seed: int) -> SuiteResult:
    res = SuiteResult("series-oracle", seed,
                      "all 100 trials: L1 gap <= 1e-8 at horizon "
                      "ceil(ln 1e-10 / ln(1-eps))")
    rng = np.random.default_rng(seed)
    for _ in range(100):
        n = int(rng.integers(5, 31))
        d = int(rng.integers(2, min(6, n)))
        g = random_ergodic_graph(n, d, int(rng.integers(2 ** 31)))
        eps = float(rng.uniform(0.05, 0.5))
        rm = ResetModel(_random_reset(rng, n), eps)
        horizon = math.ceil(math.log(1e-10) / math.log1p(-eps))
        gap = _f(np.abs(pagerank(g, rm)
                        - pagerank_series_oracle(g, rm, horizon)).sum())
        zero_horizon = _f(np.abs(pagerank_series_oracle(g, rm, 0)
                                 - rm.reset).max())
        res.record(gap <= 1e-8 and zero_horizon <= 1e-15,
                   n=n, eps=eps, horizon=horizon, l1_gap=gap)
    return res.finish()


# ---------------------------------------------------------------------------
# 9. PageRank is linear in the reset vector

def _suite_linearity(seed: int) -> SuiteResult:
    res = SuiteResult("linearity", seed,
                      "all 100 trials: Linf gap of the per-vertex "
                      "decomposition <= 1e-9")
    rng = np.random.default_rng(seed)
    for _ in range(100):
        n = int(rng.integers(3, 21))
        d = int(rng.integers(2, min(6, n)))
        g = random_ergodic_graph(n, d, int(rng.integers(2 ** 31)))
        eps = float(rng.uniform(0.05, 0.5))
        reset = _random_reset(rng, n)
        full = pagerank(g, ResetModel(reset, eps))
        combo = np.zeros(n)
        for x in range(n):
            combo += reset[x] * pagerank(g, ResetModel(point_mass(n, x), eps))
        gap = _f(np.abs(full - combo).max())
        res.record(gap <= 1e-9, n=n, eps=eps, linf_gap=gap)
    return res.finish()


# ---------------------------------------------------------------------------
# 10. spam resistance of trusted min-PPR (and trusted PPR) under attacks

def _rewire_attack(rng: np.random.Generator, g, trusted) -> SpamScenario:
    outside = [v for v in range(g.n) if v not in trusted]
    count = int(rng.integers(1, 11))
    bought = sorted(int(v) for v in
                    rng.choice(outside, size=min(count, len(outside)),
                               replace=False))
    src, dst = g.edge_array()
    keep = ~np.isin(src, bought)
    edges = [(int(a), int(b)) for a, b in zip(src[keep], dst[keep])]
    for p in bought:
        targets = rng.choice(g.n, size=int(rng.integers(1, 5)), replace=False)
        edges.extend((p, int(t)) for t in targets)
    return SpamScenario(base=g, trusted=frozenset(trusted),
                        purchased=frozenset(bought),
                        spam_graph=build_graph(g.n, edges))


def _selfloop_attack(rng: np.random.Generator, g, trusted,
                     cost: CostFunction) -> SpamScenario:
    outside = [v for v in range(g.n) if v not in trusted]
    target = min(outside, key=lambda v: (cost.values[v], v))
    src, dst = g.edge_array()
    keep = src != target
    edges = [(int(a), int(b)) for a, b in zip(src[keep], dst[keep])]
    edges.append((target, target))
    return SpamScenario(base=g, trusted=frozenset(trusted),
                        purchased=frozenset({target}),
                        spam_graph=build_graph(g.n, edges))


def _suite_minppr_spam_resistance(seed: int) -> SuiteResult:
    res = SuiteResult("minppr-spam-resistance", seed,
                      "every attack: min-PPR ratio >= eps/3k - 1e-9 and "
                      "PPR ratio >= eps - 1e-9")
    rng = np.random.default_rng(seed)
    eps, k = 0.03, 3
    for n in (50, 100):
        g = clique(n)
        ref = reference_rank(g)
        tau = mixing_time(g, MixingQuery.worst_case(), ref)
        mixing_ok = tau <= 1.0 / (3 * eps * (3 + math.log2(n)))
        trusted = frozenset(int(t) for t in
                            rng.choice(n, size=3, replace=False))
        cost_min = minppr_cost(g, trusted, k, eps)
        cost_ppr = ppr_cost(g, trusted, eps)
        base_min = t_min_ppr(g, trusted, k, eps)
        agreement = _f(np.abs(base_min
                              - min_ppr(g, sorted(trusted)[:k], eps)).max())
        for _ in range(25):
            kind = ["selfloop", "sinkfarm", "rewire"][int(rng.integers(3))]
            if kind == "selfloop":
                scenario = _selfloop_attack(rng, g, trusted, cost_min)
            elif kind == "sinkfarm":
                outside = [v for v in range(n) if v not in trusted]
                victim = int(rng.choice(outside))
                scenario = attack_sink_farm(g, trusted, victim,
                                            int(rng.integers(1, 201)))
            else:
                scenario = _rewire_attack(rng, g, trusted)
            r_min = spam_ratio(scenario, cost_min, "tminppr", eps, k=k)
            r_ppr = spam_ratio(scenario, cost_ppr, "tppr", eps)
            ok = (mixing_ok and agreement <= 1e-12
                  and r_min >= eps / (3 * k) - 1e-9
                  and r_ppr >= eps - 1e-9)
            res.record(ok, n=n, attack=kind,
                       purchased=sorted(scenario.purchased),
                       spam_nodes=len(scenario.spam_nodes),
                       minppr_ratio=_f(r_min) if math.isfinite(r_min)
                       else "unbounded",
                       tppr_ratio=_f(r_ppr) if math.isfinite(r_ppr)
                       else "unbounded")
    return res.finish()


# ---------------------------------------------------------------------------
# 11. spammer gain bound: what a purchase can be worth at most

def _suite_spammer_bound(seed: int) -> SuiteResult:
    res = SuiteResult("spammer-bound", seed,
                      "all 500 trials: post-attack rank of (A union S) <= "
                      "pre-attack rank of A\\P plus rank(P)/eps + 1e-9")
    rng = np.random.default_rng(seed)
    for _ in range(500):
        n = int(rng.integers(10, 41))
        d = int(rng.integers(2, 5))
        g = random_ergodic_graph(n, d, int(rng.integers(2 ** 31)))
        bought = sorted(int(v) for v in
                        rng.choice(n, size=int(rng.integers(0, n // 4 + 1)),
                                   replace=False))
        free = [v for v in range(n) if v not in bought]
        trusted = frozenset({int(rng.choice(free))})
        spam_count = int(rng.integers(0, 11))
        n_h = n + spam_count

        src, dst = g.edge_array()
        keep = ~np.isin(src, bought)
        edges = [(int(a), int(b)) for a, b in zip(src[keep], dst[keep])]
        for p in bought:
            targets = rng.choice(n_h, size=int(rng.integers(1, 5)),
                                 replace=False)
            edges.extend((p, int(t)) for t in targets)
        for s in range(n, n_h):
            targets = rng.choice(n_h, size=int(rng.integers(1, 4)),
                                 replace=False)
            edges.extend((s, int(t)) for t in targets)
        h = build_graph(n_h, edges)

        eps = float(rng.uniform(0.05, 0.3))
        reset = np.zeros(n)
        reset[free] = rng.dirichlet(np.ones(len(free)))
        reset_h = np.concatenate([reset, np.zeros(spam_count)])
        audited = sorted(int(v) for v in
                         rng.choice(n, size=int(rng.integers(1, n + 1)),
                                    replace=False))

        pi_g = pagerank(g, ResetModel(reset, eps))
        pi_h = pagerank(h, ResetModel(reset_h, eps))
        lhs = _f(pi_h[audited].sum() + pi_h[n:].sum())
        off_p = [v for v in audited if v not in bought]
        rhs = _f(pi_g[off_p].sum() + pi_g[bought].sum() / eps + 1e-9)
        ok = (lhs <= rhs
              and validate_spam_graph(g, trusted, bought, h))
        res.record(ok, n=n, purchased=len(bought), spam=spam_count,
                   eps=eps, lhs=lhs, rhs=rhs)
    return res.finish()


# ---------------------------------------------------------------------------
# 12. algorithms blind to the trusted set are free to spam

def _suite_duplicate_attack(seed: int) -> SuiteResult:
    res = SuiteResult("duplicate-attack", seed,
                      "uniform-reset PageRank hands the free duplicate "
                      "exactly half the rank (cost zero)")
    rng = np.random.default_rng(seed)
    g = random_ergodic_graph(12, 3, int(rng.integers(2 ** 31)))
    scenario = attack_duplicate(g, trusted=frozenset({0}))
    gain = spam_gain(scenario, "upr", 0.1)
    res.record(abs(gain - 0.5) <= 1e-12, gain=gain)

    values = np.zeros(g.n)
    values[1:] = 1.0 / (g.n - 1)
    cost = CostFunction(values=values, trusted=frozenset({0}))
    ratio = spam_ratio(scenario, cost, "upr", 0.1)
    res.record(ratio == 0.0 and cost.of(scenario.purchased) == 0.0,
               ratio=ratio, cost=cost.of(scenario.purchased))
    return res.finish()


# ---------------------------------------------------------------------------
# 13. reset inversion round trips and probability recovery

def _suite_reset_roundtrip(seed: int) -> SuiteResult:
    res = SuiteResult("reset-roundtrip", seed,
                      "all 200 trials: inverted reset within 1e-9 of the "
                      "truth, recovered probability within 1e-8, plus "
                      "fixed-point/mismatch/witness checks")
    rng = np.random.default_rng(seed)
    for _ in range(200):
        n = int(rng.integers(5, 41))
        d = int(rng.integers(2, min(6, n)))
        g = random_ergodic_graph(n, d, int(rng.integers(2 ** 31)))
        eps = float(rng.uniform(0.05, 0.5))
        reset = _random_reset(rng, n)
        p = pagerank(g, ResetModel(reset, eps))
        recovered = invert_reset(g, p, eps)
        gap = _f(np.abs(recovered - reset).max())
        report = recover_reset_probability(g, p, reset)
        eps_ok = (report.kind == "unique" and report.eps is not None
                  and abs(report.eps - eps) <= 1e-8)
        res.record(gap <= 1e-9 and eps_ok, n=n, eps=eps, linf_gap=gap,
                   recovered_eps=report.eps)

    # fixed point: a stationary reset pins nothing down
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    report = recover_reset_probability(g, uniform_vector(3), uniform_vector(3))
    res.record(report.kind == "fixed_point", check="fixed-point")

    # mismatched reset vectors are rejected
    rng2 = np.random.default_rng(seed + 1)
    g = random_ergodic_graph(12, 3, int(rng2.integers(2 ** 31)))
    p = pagerank(g, ResetModel(_random_reset(rng2, 12), 0.2))
    try:
        recover_reset_probability(g, p, _random_reset(rng2, 12))
        res.record(False, check="mismatch-detected")
    except InconsistentReset:
        res.record(True, check="mismatch-detected")

    # strictly positive vectors are PageRanks, with a usable witness
    dense = _random_reset(rng2, 12)
    flag, witness = is_pagerank(g, dense)
    res.record(flag and witness is not None
               and is_pagerank_at(g, dense, witness),
               check="positive-witness", witness_eps=witness)
    return res.finish()


# ---------------------------------------------------------------------------
# 14. median-filtered center selection keeps distortion low

def _suite_hard_variant(seed: int) -> SuiteResult:
    res = SuiteResult("hard-variant", seed,
                      ">= 90 of 100 trials: distortion of the median-"
                      "filtered min-PPR <= 1 + 40 gamma delta log2 n "
                      "+ 2 n^(1-delta)")
    rng = np.random.default_rng(seed)
    n, k, delta = 200, 4, 1.0
    g = random_ergodic_graph(n, 3, int(rng.integers(2 ** 31)))
    ref = reference_rank(g)
    tau = mixing_time(g, MixingQuery.worst_case(), ref)
    log2n = math.log2(n)
    eps = 0.5 / (210.0 * tau * log2n)
    emt = expected_mixing_time(g, ref, 0.25, ref)
    gamma = 8.0 * eps * emt
    bound = 1.0 + 40.0 * gamma * delta * log2n + 2.0 * n ** (1.0 - delta)
    params = DistortionParams(delta)
    for _ in range(100):
        trusted = set(int(c) for c in
                      rng.choice(n, size=2 * k - 1, replace=True, p=ref))
        out, report = t_min_ppr_hard(g, trusted, gamma, delta, k, eps)
        measured = distortion(out, g, params, ref).graph_distortion
        sane = (len(report.discarded) <= k - 1
                and set(report.kept) <= set(trusted))
        res.record(measured <= bound and sane, trusted=sorted(trusted),
                   kept=report.kept, distortion=measured, bound=bound,
                   gamma=gamma, emt=emt)
    return res.finish()


# ---------------------------------------------------------------------------
# 15. mixing-time machinery: amplification, deficit, entropy range

def _suite_mixing_bounds(seed: int) -> SuiteResult:
    res = SuiteResult("mixing-bounds", seed,
                      "all trials: tolerance amplification, per-vertex "
                      "deficit bound, entropy range, and scan consistency")
    rng = np.random.default_rng(seed)
    for _ in range(20):
        n = int(rng.integers(20, 61))
        d = int(rng.integers(2, 5))
        g = random_ergodic_graph(n, d, int(rng.integers(2 ** 31)))
        ref = reference_rank(g)
        x = int(rng.integers(n))
        reset = 0.5 * point_mass(n, x) + 0.5 * _random_reset(rng, n)
        tau_r = mixing_time(g, MixingQuery.from_distribution(reset), ref)

        amplified_ok = True
        for rho in (1 / 8, 1 / 16, 1 / 64):
            t_rho = mixing_time(g, MixingQuery.from_distribution(reset, rho),
                                ref)
            amplified_ok &= t_rho <= math.ceil(math.log2(1 / rho)) * tau_r

        # the scan's answer really is within tolerance at the reported time
        arrived = walk_distribution(g, reset, tau_r)
        scan_ok = tv_distance(arrived, ref) <= 0.25
        if tau_r > 0:
            scan_ok &= tv_distance(walk_distribution(g, reset, tau_r - 1),
                                   ref) > 0.25

        eps = float(rng.uniform(0.01, 0.05))
        p = pagerank(g, ResetModel(reset, eps))
        pos = ref > 0
        deficit = (ref[pos] - p[pos]) / ref[pos]
        allowance = eps * tau_r * (3.0 - np.log2(ref[pos]))
        deficit_ok = bool((deficit <= allowance + 1e-9).all())

        h = entropy(ref)
        entropy_ok = 0.0 <= h <= math.log2(n)
        emt_r = expected_mixing_time(g, point_mass(n, x), 0.25, ref)
        emt_ok = emt_r == mixing_time(g, MixingQuery.from_vertex(x), ref)

        res.record(amplified_ok and scan_ok and deficit_ok and entropy_ok
                   and emt_ok, n=n, tau_r=tau_r, entropy=h,
                   max_deficit=_f(deficit.max()))
    return res.finish()


# ---------------------------------------------------------------------------
# 16. relay inflation pumps uniform-reset rank while the reference holds

def _suite_inflation(seed: int) -> SuiteResult:
    res = SuiteResult("inflation", seed,
                      "uniform-reset rank of the target grows with every "
                      "added relay bundle; reference rank stays defined")
    base = clique(3)
    eps = 0.1
    previous = None
    for m in (1, 2, 4, 8, 16):
        g = path_inflation(base, (0, 1), m)
        ref = reference_rank(g)
        upr = pagerank(g, ResetModel(uniform_vector(g.n), eps))
        stretch = distortion(upr, g, DistortionParams(1.0),
                             ref).stretch[1]
        value = _f(upr[1])
        grew = previous is None or value > previous
        res.record(grew and is_ergodic(g), m=m, upr_at_target=value,
                   stretch_at_target=_f(stretch))
        previous = value
    return res.finish()


# ---------------------------------------------------------------------------

_SUITES = {
    "min-closure": _suite_min_closure,
    "median-failure": _suite_median_failure,
    "clique-tightness": _suite_clique_tightness,
    "upr-distortion": _suite_upr_distortion,
    "contraction-bound": _suite_contraction_bound,
    "tv-bound": _suite_tv_bound,
    "minppr-distortion": _suite_minppr_distortion,
    "series-oracle": _suite_series_oracle,
    "linearity": _suite_linearity,
    "minppr-spam-resistance": _suite_minppr_spam_resistance,
    "spammer-bound": _suite_spammer_bound,
    "duplicate-attack": _suite_duplicate_attack,
    "reset-roundtrip": _suite_reset_roundtrip,
    "hard-variant": _suite_hard_variant,
    "mixing-bounds": _suite_mixing_bounds,
    "inflation": _suite_inflation,
}

# every public operation each suite exercises, for the coverage check
SUITE_COVERAGE = {
    "min-closure": {"families.random_ergodic_graph", "graph.is_ergodic",
                    "graph.is_coherent", "graph.max_coherent_subset",
                    "algebra.min_ppr", "algebra.invert_reset",
                    "algebra.is_pagerank_at", "rank.pagerank"},
    "median-failure": {"families.median_counterexample", "rank.pagerank",
                       "algebra.median_rank", "algebra.min_rank",
                       "algebra.invert_reset", "algebra.is_pagerank",
                       "algebra.is_pagerank_at"},
    "clique-tightness": {"families.clique", "spam.ppr_cost",
                         "spam.attack_clique_selfloop", "spam.spam_gain",
                         "spam.spam_ratio", "spam.validate_spam_graph",
                         "algebra.t_ppr"},
    "upr-distortion": {"families.upr_bad_family", "rank.reference_rank",
                       "rank.pagerank", "metrics.distortion",
                       "metrics.mixing_time"},
    "contraction-bound": {"families.random_ergodic_graph",
                          "rank.reference_rank", "rank.pagerank",
                          "metrics.mixing_time", "metrics.distortion"},
    "tv-bound": {"families.random_ergodic_graph", "rank.reference_rank",
                 "rank.pagerank", "metrics.mixing_time",
                 "metrics.tv_distance", "metrics.entropy"},
    "minppr-distortion": {"families.random_ergodic_graph",
                          "rank.reference_rank", "algebra.min_ppr",
                          "metrics.distortion", "metrics.mixing_time"},
    "series-oracle": {"families.random_ergodic_graph", "rank.pagerank",
                      "rank.pagerank_series_oracle"},
    "linearity": {"families.random_ergodic_graph", "rank.pagerank"},
    "minppr-spam-resistance": {"families.clique", "spam.minppr_cost",
                               "spam.ppr_cost", "spam.attack_sink_farm",
                               "spam.spam_ratio", "algebra.t_min_ppr",
                               "algebra.min_ppr", "graph.build_graph",
                               "metrics.mixing_time"},
    "spammer-bound": {"families.random_ergodic_graph", "graph.build_graph",
                      "rank.pagerank", "spam.validate_spam_graph"},
    "duplicate-attack": {"families.random_ergodic_graph",
                         "spam.attack_duplicate", "spam.spam_gain",
                         "spam.spam_ratio"},
    "reset-roundtrip": {"families.random_ergodic_graph", "graph.build_graph",
                        "rank.pagerank", "algebra.invert_reset",
                        "algebra.recover_reset_probability",
                        "algebra.is_pagerank", "algebra.is_pagerank_at"},
    "hard-variant": {"families.random_ergodic_graph", "rank.reference_rank",
                     "algebra.t_min_ppr_hard", "metrics.distortion",
                     "metrics.mixing_time", "metrics.expected_mixing_time"},
    "mixing-bounds": {"families.random_ergodic_graph", "rank.reference_rank",
                      "rank.walk_distribution", "rank.pagerank",
                      "metrics.mixing_time", "metrics.expected_mixing_time",
                      "metrics.tv_distance", "metrics.entropy"},
    "inflation": {"families.clique", "families.path_inflation",
                  "rank.reference_rank", "rank.pagerank", "graph.is_ergodic",
                  "metrics.distortion"},
}

PUBLIC_OPERATIONS = {
    "graph.build_graph", "graph.is_ergodic", "graph.is_coherent",
    "graph.max_coherent_subset",
    "rank.walk_distribution", "rank.reference_rank", "rank.pagerank",
    "rank.pagerank_series_oracle",
    "algebra.invert_reset", "algebra.is_pagerank_at", "algebra.is_pagerank",
    "algebra.recover_reset_probability", "algebra.min_rank",
    "algebra.median_rank", "algebra.min_ppr", "algebra.t_ppr",
    "algebra.t_min_ppr", "algebra.t_min_ppr_hard",
    "metrics.tv_distance", "metrics.mixing_time",
    "metrics.expected_mixing_time", "metrics.distortion", "metrics.entropy",
    "spam.validate_spam_graph", "spam.ppr_cost", "spam.minppr_cost",
    "spam.spam_gain", "spam.spam_ratio", "spam.attack_clique_selfloop",
    "spam.attack_duplicate", "spam.attack_sink_farm",
    "families.clique", "families.upr_bad_family",
    "families.median_counterexample", "families.path_inflation",
    "families.random_ergodic_graph",
}

ACCEPTANCE_SUITES = (
    "min-closure", "median-failure", "clique-tightness", "upr-distortion",
    "contraction-bound", "tv-bound", "minppr-distortion", "series-oracle",
    "linearity", "minppr-spam-resistance", "spammer-bound",
    "duplicate-attack",
)


def suite_names() -> list[str]:
    return list(_SUITES)


def coverage_gaps() -> set[str]:
    """Public operations not exercised by any suite (should be empty)."""
    covered = set().union(*SUITE_COVERAGE.values())
    return PUBLIC_OPERATIONS - covered


def run_suite(name: str, seed: int) -> SuiteResult:
    """Run one named suite with all randomness derived from ``seed``."""
    if name not in _SUITES:
        raise UnknownSuite(f"no suite named {name!r}; "
                           f"known: {', '.join(sorted(_SUITES))}")
    start = time.perf_counter()
    result = _SUITES[name](int(seed))
    result.seconds = time.perf_counter() - start
    return result


def run_all(seed: int) -> list[SuiteResult]:
    """Run every suite; the coverage manifest must have no gaps."""
    gaps = coverage_gaps()
    if gaps:
        raise AssertionError(f"suites leave operations uncovered: {gaps}")
    return [run_suite(name, seed) for name in _SUITES]
