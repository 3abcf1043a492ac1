"""LP-guided DFS approximation for the matching augmentation problem (MAP)."""

from .cutlp import (Cut, InfeasibleInstance, LpSolution, alpha_fractional_vertices,
                    fractional_edges, separate, solve_cut_lp)
from .dfs import (DfsTree, TightnessReport, guided_dfs, node_cut_check, tightness_report,
                  tree_cut_values, unguided_dfs)
from .generators import gen_bad_dfs_instance, gen_gap_instance, gen_random_instance, random_suite
from .graph import (MapInstance, MultiGraph, ValidationReport, cut_weight, find_bridges,
                    is_two_edge_connected, validate_instance)
from .oracle import OracleResult, exact_cut_lp_enumeration, exact_opt, exact_uplink_cover
from .pipeline import DiagnosticsBlock, SolveOptions, SolveReport, diagnostics, solve, verify_solution
from .tap import (Augmentation, ScaledTapSolution, optimal_uplink_cover, restricted_solution,
                  scaled_solution, tap_fractional_optimum)

__version__ = "0.1.0"

__all__ = [
    "alpha_fractional_vertices",
    "Augmentation",
    "Cut",
    "cut_weight",
    "DfsTree",
    "diagnostics",
    "DiagnosticsBlock",
    "exact_cut_lp_enumeration",
    "exact_opt",
    "exact_uplink_cover",
    "find_bridges",
    "fractional_edges",
    "gen_bad_dfs_instance",
    "gen_gap_instance",
    "gen_random_instance",
    "guided_dfs",
    "InfeasibleInstance",
    "is_two_edge_connected",
    "LpSolution",
    "MapInstance",
    "MultiGraph",
    "node_cut_check",
    "optimal_uplink_cover",
    "OracleResult",
    "random_suite",
    "restricted_solution",
    "scaled_solution",
    "ScaledTapSolution",
    "separate",
    "solve",
    "solve_cut_lp",
    "SolveOptions",
    "SolveReport",
    "tap_fractional_optimum",
    "tightness_report",
    "TightnessReport",
    "tree_cut_values",
    "unguided_dfs",
    "validate_instance",
    "ValidationReport",
    "verify_solution",
]
