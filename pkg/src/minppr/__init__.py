"""Graph-ranking toolkit: PageRank variants with quality diagnostics.

Implements PageRank with arbitrary reset vectors, personalized PageRank,
the normalized entrywise min and median of PageRank families, reset-
vector inversion, distortion and mixing-time metrics, a link-spam game
with attack constructors, explicit counterexample graph families, and a
seeded verification harness exposed through the ``minppr`` CLI.
"""

from .algebra import (HardSelectionReport, RealizationReport, invert_reset,
                      is_pagerank, is_pagerank_at, median_rank, min_ppr,
                      min_rank, recover_reset_probability, t_min_ppr,
                      t_min_ppr_hard, t_ppr)
from .families import (GeneratorSpec, clique, cycle, median_counterexample,
                       path_inflation, random_ergodic_graph, upr_bad_family,
                       upr_bad_reference_rank)
from .graph import (DirectedGraph, build_graph, is_coherent, is_ergodic,
                    load_edge_list, max_coherent_subset, save_edge_list)
from .kernels import backend_name
from .metrics import (DistortionParams, DistortionReport, MixingQuery,
                      distortion, entropy, expected_mixing_time, mixing_time,
                      tv_distance)
from .rank import (ResetModel, as_rank_vector, pagerank,
                   pagerank_series_oracle, point_mass, reference_rank,
                   uniform_vector, walk_distribution)
from .spam import (CostFunction, SpamScenario, attack_clique_selfloop,
                   attack_duplicate, attack_sink_farm, load_scenario,
                   minppr_cost, ppr_cost, save_scenario, spam_gain,
                   spam_ratio, validate_spam_graph)
from .suites import SuiteResult, run_all, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "DirectedGraph", "build_graph", "is_ergodic", "is_coherent",
    "max_coherent_subset", "load_edge_list", "save_edge_list",
    "ResetModel", "as_rank_vector", "point_mass", "uniform_vector",
    "walk_distribution", "reference_rank", "pagerank",
    "pagerank_series_oracle",
    "RealizationReport", "HardSelectionReport", "invert_reset",
    "is_pagerank_at", "is_pagerank", "recover_reset_probability",
    "min_rank", "median_rank", "min_ppr", "t_ppr", "t_min_ppr",
    "t_min_ppr_hard",
    "DistortionParams", "DistortionReport", "MixingQuery", "tv_distance",
    "mixing_time", "expected_mixing_time", "distortion", "entropy",
    "CostFunction", "SpamScenario", "validate_spam_graph", "ppr_cost",
    "minppr_cost", "spam_gain", "spam_ratio", "attack_clique_selfloop",
    "attack_duplicate", "attack_sink_farm", "load_scenario", "save_scenario",
    "GeneratorSpec", "clique", "cycle", "upr_bad_family",
    "upr_bad_reference_rank", "median_counterexample", "path_inflation",
    "random_ergodic_graph",
    "SuiteResult", "run_suite", "run_all", "suite_names",
    "backend_name",
]
