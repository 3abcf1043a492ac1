"""Uplink covers of a DFS tree: the optimal integral cover and fractional covers.

A back edge (a, d) covers every tree edge on the path from d up to a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dfs import DfsTree, tree_cut_values
from .graph import MapInstance
from .simplex import InfeasibleLP, solve_covering_lp


class UncoverableTreeEdge(ValueError):
    pass


@dataclass(frozen=True)
class Augmentation:
    chosen: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.chosen)


@dataclass(frozen=True)
class ScaledTapSolution:
    t_choice: dict[int, int]          # back edge -> tree edge t_e on its path
    denominator: dict[int, Fraction]  # back edge -> x(T(t_e)) - x_{t_e}
    z: dict[int, Fraction]            # tree edge -> sum of x_e over e with t_e = t
    y: dict[int, Fraction]            # back edge -> scaled value

    @property
    def total(self) -> Fraction:
        return sum(self.y.values(), Fraction(0))


def optimal_uplink_cover(tree: DfsTree) -> Augmentation:
    """Minimum-cardinality set of back edges covering every tree edge.

    Bottom-up greedy: when the edge above ``v`` is still uncovered, every
    edge below it already is, so the best choice is the back edge leaving
    T_v that reaches the shallowest ancestor.
    """
    n = tree.n
    # highest reach from each subtree: (ancestor depth, edge id)
    reach: list[tuple[int, int] | None] = [None] * n
    for e in sorted(tree.back_edges):
        a, d = tree.back_edges[e]
        cand = (tree.depth[a], e)
        if reach[d] is None or cand < reach[d]:
            reach[d] = cand
    for v in reversed(tree.order):
        p = tree.parent.get(v)
        if p is not None and reach[v] is not None:
            if reach[p] is None or reach[v] < reach[p]:
                reach[p] = reach[v]

    covered: set[int] = set()
    chosen: set[int] = set()
    for v in reversed(tree.order):
        if v == tree.root:
            continue
        t = tree.parent_edge[v]
        if t in covered:
            continue
        if reach[v] is None or reach[v][0] >= tree.depth[v]:
            raise UncoverableTreeEdge(f"tree edge {t} is crossed by no back edge")
        e = reach[v][1]
        chosen.add(e)
        a, d = tree.back_edges[e]
        covered.update(tree.path_edges(a, d))
    return Augmentation(frozenset(chosen))


def coverage(tree: DfsTree, y: dict[int, Fraction]) -> dict[int, Fraction]:
    """Tree edge -> sum of y over the back edges covering it."""
    cov = {t: Fraction(0) for t in tree.tree_edges}
    for e, val in y.items():
        a, d = tree.back_edges[e]
        for t in tree.path_edges(a, d):
            cov[t] += val
    return cov


def is_tap_feasible(tree: DfsTree, y: dict[int, Fraction]) -> bool:
    return all(c >= 1 for c in coverage(tree, y).values())


def restricted_solution(tree: DfsTree, x) -> dict[int, Fraction]:
    """x restricted to the back edges; raises if it fails to cover some tree edge."""
    xs = getattr(x, "x", x)
    y = {e: Fraction(xs[e]) for e in sorted(tree.back_edges)}
    if not is_tap_feasible(tree, y):
        raise AssertionError("restriction of x to back edges is not a feasible cover")
    return y


def scaled_solution(inst: MapInstance, tree: DfsTree, x) -> ScaledTapSolution:
    """Scale each back edge by the smallest cut slack along its tree path.

    For back edge e, t_e minimizes x(T(t)) - x_t over the tree edges on its
    path (ties to the shallowest such edge, i.e. smallest dfs index of the
    lower endpoint) and y_e = x_e / (x(T(t_e)) - x_{t_e}).
    """
    xs = getattr(x, "x", x)
    cuts = tree_cut_values(inst, tree, xs)
    t_choice, denom, y = {}, {}, {}
    z = {t: Fraction(0) for t in tree.tree_edges}
    for e in sorted(tree.back_edges):
        a, d = tree.back_edges[e]
        path = tree.path_edges(a, d)
        t = min(path, key=lambda t: (cuts[t] - xs[t], tree.dfs_index[tree.child_of(t)]))
        q = cuts[t] - xs[t]
        if q <= 0:
            raise ZeroDivisionError(f"slack of tree edge {t} is not positive")
        t_choice[e] = t
        denom[e] = q
        y[e] = Fraction(xs[e]) / q
        z[t] += Fraction(xs[e])
    return ScaledTapSolution(t_choice, denom, z, y)


def tap_fractional_optimum(tree: DfsTree) -> Fraction:
    """Exact optimum of the tree-augmentation LP over the back edges.

    min sum y_e  s.t.  coverage(t) >= 1 for each tree edge t,  0 <= y <= 1.
    """
    back = sorted(tree.back_edges)
    col = {e: j for j, e in enumerate(back)}
    rows: dict[int, dict[int, int]] = {t: {} for t in tree.tree_edges}
    for e in back:
        a, d = tree.back_edges[e]
        for t in tree.path_edges(a, d):
            rows[t][col[e]] = 1
    if any(not r for r in rows.values()):
        raise UncoverableTreeEdge("some tree edge is crossed by no back edge")
    try:
        value, _ = solve_covering_lp([1] * len(back), [(rows[t], 1) for t in sorted(rows)],
                                     upper=[1] * len(back))
    except InfeasibleLP as exc:  # pragma: no cover
        raise UncoverableTreeEdge(str(exc)) from exc
    return value
