"""The LP-based MAP algorithm end to end, with its report and diagnostics.

1. optimal extreme point x* of the cut LP
2. DFS on the support of x*, light edges first, then the largest x*_e
3. optimal uplink cover A of the DFS tree T; return H = T + A
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .cutlp import LpSolution, alpha_fractional_vertices, fractional_edges, solve_cut_lp
from .dfs import DfsTree, guided_dfs, node_cut_check, tightness_report, unguided_dfs
from .graph import MapInstance, is_two_edge_connected
from .oracle import exact_opt
from .tap import coverage, optimal_uplink_cover, restricted_solution, scaled_solution

DEFAULT_GAMMA = Fraction(1, 1000)
DEFAULT_EPSILON = Fraction(1, 10)


@dataclass(frozen=True)
class SolveOptions:
    gamma: Fraction = DEFAULT_GAMMA
    epsilon: Fraction = DEFAULT_EPSILON
    diagnostics: bool = False
    oracle: bool = False
    oracle_budget: int | None = 5_000_000
    guided: bool = True
    # let the augmentation use non-support edges of G that are uplinks of T
    augment_from_all_edges: bool = False


@dataclass(frozen=True)
class DiagnosticsBlock:
    gamma: Fraction
    epsilon: Fraction
    n_tight: int
    s_sizes: tuple[int, int, int, int]   # |S0|, |S1|, |S0+|, |S0-|
    cost_in_tree: Fraction
    x_prime: dict[int, Fraction]
    x_prime_cost: Fraction
    x_prime_feasible: bool
    fractional_edge_count: int
    alpha_fractional_count: int
    node_cut_violations: tuple[int, ...]
    scaled_total: Fraction
    scaled_feasible: bool
    restricted_total: Fraction


@dataclass(frozen=True)
class SolveReport:
    n: int
    matching_size: int
    lp_cost: Fraction
    tree_heavy_cost: int
    aug_size: int
    total_cost: int
    ratio_vs_lp: Fraction
    f_min_support: Fraction
    lp: LpSolution = field(repr=False)
    tree: DfsTree = field(repr=False)
    augmentation: frozenset[int] = frozenset()
    diagnostics: DiagnosticsBlock | None = None
    opt_cost: int | None = None
    ratio_vs_opt: Fraction | None = None
    guided: bool = True


def verify_solution(inst: MapInstance, edges: Iterable[int]) -> bool:
    """M is contained in H and H is a spanning 2-edge-connected subgraph."""
    h = set(edges)
    if not h <= set(range(inst.m)) or not inst.light <= h:
        return False
    return is_two_edge_connected(inst.graph, h)


def diagnostics(inst: MapInstance, x: LpSolution, tree: DfsTree,
                gamma=DEFAULT_GAMMA, epsilon=DEFAULT_EPSILON) -> DiagnosticsBlock:
    """Tightness counts, c(x*_T) and the rescaled cover x' for one run.

    Back edges lying under some gamma-tight tree cut keep x*, all others are
    divided by 1 + gamma.
    """
    gamma, epsilon = Fraction(gamma), Fraction(epsilon)
    xs = x.x
    rep = tightness_report(inst, tree, xs, gamma)
    under_tight = set()
    for e, (a, d) in tree.back_edges.items():
        if any(t in rep.tight for t in tree.path_edges(a, d)):
            under_tight.add(e)
    x_prime = {}
    for e in sorted(tree.back_edges):
        # every back edge falls in one of the two classes
        x_prime[e] = xs[e] if e in under_tight else xs[e] / (1 + gamma)
    x_prime_cost = sum((x_prime[e] * inst.weight[e] for e in x_prime), Fraction(0))
    feasible = all(c >= 1 for c in coverage(tree, x_prime).values())
    cost_in_tree = sum((xs[e] for e in tree.tree_edges if not inst.is_light(e)), Fraction(0))
    scaled = scaled_solution(inst, tree, x)
    restricted = {e: Fraction(xs[e]) for e in tree.back_edges}
    return DiagnosticsBlock(
        gamma=gamma,
        epsilon=epsilon,
        n_tight=rep.tight_count,
        s_sizes=(len(rep.s0_light_tight), len(rep.s1_heavy_tight), len(rep.s0_plus), len(rep.s0_minus)),
        cost_in_tree=cost_in_tree,
        x_prime=x_prime,
        x_prime_cost=x_prime_cost,
        x_prime_feasible=feasible,
        fractional_edge_count=len(fractional_edges(xs)),
        alpha_fractional_count=len(alpha_fractional_vertices(inst.graph, xs, gamma / 16)),
        node_cut_violations=tuple(node_cut_check(inst, tree, xs, gamma, gamma / 16)),
        scaled_total=scaled.total,
        scaled_feasible=all(c >= 1 for c in coverage(tree, scaled.y).values()),
        restricted_total=sum(restricted.values(), Fraction(0)),
    )


def _widen_with_uplinks(inst: MapInstance, tree: DfsTree) -> DfsTree:
    """Copy of ``tree`` whose back edges include every uplink of G."""
    from dataclasses import replace

    back = dict(tree.back_edges)
    for e, (u, v) in enumerate(inst.graph.edges):
        if e in tree.tree_edges or e in back or u == v:
            continue
        if tree.is_ancestor(u, v):
            back[e] = (u, v)
        elif tree.is_ancestor(v, u):
            back[e] = (v, u)
    return replace(tree, back_edges=back)


def solve(inst: MapInstance, root: int = 0, options: SolveOptions | None = None,
          lp: LpSolution | None = None) -> tuple[frozenset[int], SolveReport]:
    """Run the algorithm; returns H and its report.

    With ``options.guided = False`` the DFS runs over all of G in plain
    smallest-neighbor order, ignoring x* (the comparison baseline).
    """
    opts = options or SolveOptions()
    if lp is None:
        lp = solve_cut_lp(inst)
    if opts.guided:
        tree = guided_dfs(inst, lp, root)
    else:
        tree = unguided_dfs(inst, root)
    cover_tree = _widen_with_uplinks(inst, tree) if opts.augment_from_all_edges and opts.guided else tree
    aug = optimal_uplink_cover(cover_tree)
    # M is already inside T for the guided DFS; the baseline may miss some
    h = frozenset(tree.tree_edges | aug.chosen | inst.light)
    if aug.chosen & tree.tree_edges:
        raise AssertionError("augmentation reuses a tree edge")
    if not verify_solution(inst, h):
        raise AssertionError("T + A is not a feasible MAP solution")

    tree_heavy = inst.cost(tree.tree_edges)
    total = inst.cost(h)
    support_values = [lp.x[e] for e in lp.support]
    f_min = min(support_values) if support_values else Fraction(0)
    ratio = Fraction(total) / lp.objective if lp.objective else Fraction(0)

    diag = None
    if opts.diagnostics and opts.guided:
        diag = diagnostics(inst, lp, tree, opts.gamma, opts.epsilon)
        restricted_solution(tree, lp)  # raises if the restriction fails to cover

    opt_cost = ratio_opt = None
    if opts.oracle:
        opt_cost = exact_opt(inst, opts.oracle_budget).opt_cost
        ratio_opt = Fraction(total, opt_cost) if opt_cost else Fraction(0)

    report = SolveReport(
        n=inst.n,
        matching_size=len(inst.light),
        lp_cost=lp.objective,
        tree_heavy_cost=tree_heavy,
        aug_size=aug.size,
        total_cost=total,
        ratio_vs_lp=ratio,
        f_min_support=f_min,
        lp=lp,
        tree=tree,
        augmentation=aug.chosen,
        diagnostics=diag,
        opt_cost=opt_cost,
        ratio_vs_opt=ratio_opt,
        guided=opts.guided,
    )
    return h, report
