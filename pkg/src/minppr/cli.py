"""Command-line front end: rank / distortion / mixing / spam / gen / verify.

Exit codes: 0 success, 1 validation failure (bad flags or inputs, or a
failing verification suite), 2 computational error (non-convergence or a
mixing-time cap). Outputs are byte-identical for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import algebra, families, metrics, spam, suites
from .errors import MixingTimeout, NonConvergence
from .graph import DirectedGraph, load_edge_list, save_edge_list
from .rank import ResetModel, pagerank, point_mass, reference_rank, uniform_vector


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _format_float(x: float) -> str:
    return f"{x:.17g}"


def _write_rank_json(path: str, n: int, eps: float | None,
                     rank: np.ndarray) -> None:
    eps_text = "null" if eps is None else _format_float(eps)
    body = ", ".join(_format_float(v) for v in rank)
    with open(path, "w") as fh:
        fh.write(f'{{"n": {n}, "eps": {eps_text}, "rank": [{body}]}}\n')


def _ids(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids, "
                                         f"got {text!r}")


def _compute_rank(args, g: DirectedGraph) -> tuple[np.ndarray, float | None]:
    algo = args.algo
    if algo == "reference":
        return reference_rank(g), None
    if args.eps is None:
        raise ValueError("--eps is required for this algorithm")
    eps = args.eps
    if algo == "upr":
        return pagerank(g, ResetModel(uniform_vector(g.n), eps)), eps
    if algo == "ppr":
        centers = _require(args.centers, "--centers")
        if len(centers) != 1:
            raise ValueError("ppr takes exactly one center")
        return pagerank(g, ResetModel(point_mass(g.n, centers[0]), eps)), eps
    if algo == "minppr":
        centers = _require(args.centers, "--centers")
        return algebra.min_ppr(g, centers, eps), eps
    if algo == "tppr":
        return algebra.t_ppr(g, _require(args.trusted, "--trusted"), eps), eps
    if algo == "tminppr":
        trusted = _require(args.trusted, "--trusted")
        return algebra.t_min_ppr(g, trusted, args.k, eps), eps
    # tminppr-hard
    trusted = _require(args.trusted, "--trusted")
    out, report = algebra.t_min_ppr_hard(g, trusted, args.gamma, args.delta,
                                         args.k, eps)
    if args.out:
        with open(args.out + ".report.json", "w") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return out, eps


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required for this algorithm")
    return value


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _cmd_rank(args) -> int:
    g = load_edge_list(args.graph)
    rank, eps = _compute_rank(args, g)
    _write_rank_json(args.out, g.n, eps, rank)
    return 0


def _cmd_distortion(args) -> int:
    g = load_edge_list(args.graph)
    ref = reference_rank(g)
    rank, _ = _compute_rank(args, g)
    report = metrics.distortion(rank, g, metrics.DistortionParams(args.delta),
                                ref)
    out = Path(args.out)
    report.to_csv(out)
    report.to_json(out.with_suffix(out.suffix + ".summary.json"))
    print(f"graph distortion {report.graph_distortion:.6g} "
          f"at delta={args.delta}")
    return 0


def _cmd_mixing(args) -> int:
    g = load_edge_list(args.graph)
    ref = reference_rank(g)
    if args.centers is None:
        query = metrics.MixingQuery.worst_case(args.rho)
        source = "worst-case"
    else:
        if len(args.centers) != 1:
            return _fail("mixing takes at most one start vertex")
        query = metrics.MixingQuery.from_vertex(args.centers[0], args.rho)
        source = f"vertex {args.centers[0]}"
    steps = metrics.mixing_time(g, query, ref)
    payload = {"graph": args.graph, "rho": args.rho, "source": source,
               "steps": steps}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(f"mixing time {steps} ({source}, rho={args.rho})")
    return 0


def _cmd_spam(args) -> int:
    scenario = spam.load_scenario(args.scenario)
    if args.algo == "tppr":
        cost = spam.ppr_cost(scenario.base, scenario.trusted, args.eps)
    elif args.algo == "tminppr":
        cost = spam.minppr_cost(scenario.base, scenario.trusted, args.k,
                                args.eps)
    else:  # upr has no trusted cost structure; price uniformly
        values = np.zeros(scenario.base.n)
        outside = sorted(set(range(scenario.base.n)) - scenario.trusted)
        values[outside] = 1.0 / len(outside)
        cost = spam.CostFunction(values=values, trusted=scenario.trusted)
    gain = spam.spam_gain(scenario, args.algo, args.eps, k=args.k)
    ratio = spam.spam_ratio(scenario, cost, args.algo, args.eps, k=args.k)
    payload = {
        "algo": args.algo,
        "eps": args.eps,
        "gain": gain,
        "cost_of_purchase": cost.of(scenario.purchased),
        "ratio": "unbounded" if ratio == float("inf") else ratio,
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(f"gain {gain:.6g}, ratio "
          f"{'unbounded' if ratio == float('inf') else f'{ratio:.6g}'}")
    return 0


def _cmd_gen(args) -> int:
    params: dict
    base = None
    if args.family == "clique":
        params = {"n": args.n}
    elif args.family == "cycle":
        params = {"n": args.n}
    elif args.family == "uprbad":
        params = {"k": args.k}
    elif args.family == "medianx":
        params = {"ell": args.ell}
    elif args.family == "randomergodic":
        params = {"n": args.n, "d": args.d, "seed": args.seed}
    else:  # pathinflation
        if args.graph is None or args.edge is None:
            return _fail("pathinflation needs --graph and --edge")
        base = load_edge_list(args.graph)
        params = {"edge": args.edge, "m": args.m, "base": args.graph}
    for key, value in params.items():
        if value is None:
            return _fail(f"--{key} is required for family {args.family}")
    spec = families.GeneratorSpec(family=args.family, params=params)
    g = spec.build(base=base)
    save_edge_list(g, args.out)
    spec.to_json(args.out + ".json")
    print(f"wrote {g.n} vertices, {g.num_edges} edges to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    names = (suites.suite_names() if args.suite == "all"
             else [args.suite])
    gaps = suites.coverage_gaps()
    if args.suite == "all" and gaps:
        return _fail(f"suite manifest leaves operations uncovered: {gaps}")
    out_dir = Path(args.out) if args.out else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    all_pass = True
    for name in names:
        result = suites.run_suite(name, args.seed)
        result.to_json(out_dir / f"{name}.json")
        all_pass &= result.verdict == "pass"
        print(f"{result.verdict.upper():4s} {name} "
              f"({result.trials_passed}/{result.trials_run} trials, "
              f"{result.seconds:.1f}s)")
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minppr",
                     description="graph ranking toolkit: PageRank variants, "
                                 "distortion and spam-resistance checks")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rank_flags(p):
        p.add_argument("--graph", required=True, help="edge-list file")
        p.add_argument("--algo", required=True,
                       choices=["reference", "upr", "ppr", "minppr", "tppr",
                                "tminppr", "tminppr-hard"])
        p.add_argument("--eps", type=float)
        p.add_argument("--centers", type=_ids)
        p.add_argument("--trusted", type=_ids)
        p.add_argument("--k", type=int, default=3)
        p.add_argument("--delta", type=float, default=1.0)
        p.add_argument("--gamma", type=float, default=0.0)

    p_rank = sub.add_parser("rank", help="compute a ranking vector")
    add_rank_flags(p_rank)
    p_rank.add_argument("--out", required=True)
    p_rank.set_defaults(func=_cmd_rank)

    p_dist = sub.add_parser("distortion",
                            help="per-vertex distortion against the "
                                 "reference rank")
    add_rank_flags(p_dist)
    p_dist.add_argument("--out", required=True,
                        help="CSV path; a .summary.json is written beside it")
    p_dist.set_defaults(func=_cmd_distortion)

    p_mix = sub.add_parser("mixing", help="mixing time of the uniform walk")
    p_mix.add_argument("--graph", required=True)
    p_mix.add_argument("--rho", type=float, default=0.25)
    p_mix.add_argument("--centers", type=_ids,
                       help="single start vertex (default: worst case)")
    p_mix.add_argument("--out")
    p_mix.set_defaults(func=_cmd_mixing)

    p_spam = sub.add_parser("spam", help="evaluate a spam scenario file")
    p_spam.add_argument("--scenario", required=True)
    p_spam.add_argument("--algo", required=True,
                        choices=list(spam.ALGO_TAGS))
    p_spam.add_argument("--eps", type=float, required=True)
    p_spam.add_argument("--k", type=int, default=3)
    p_spam.add_argument("--out")
    p_spam.set_defaults(func=_cmd_spam)

    p_gen = sub.add_parser("gen", help="emit a graph family as an edge list")
    p_gen.add_argument("--family", required=True,
                       choices=["clique", "cycle", "uprbad", "medianx",
                                "pathinflation", "randomergodic"])
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--d", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--ell", type=int)
    p_gen.add_argument("--m", type=int)
    p_gen.add_argument("--edge", type=_ids, help="u,v for pathinflation")
    p_gen.add_argument("--graph", help="base graph for pathinflation")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", required=True,
                          help="suite name or 'all'")
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--out", help="directory for SuiteResult JSON "
                                        "(default: current directory)")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NonConvergence, MixingTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
