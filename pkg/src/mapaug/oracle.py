"""Ground truth at desk scale: exact MAP optimum, fully enumerated cut LP,
brute-force uplink cover."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .dfs import DfsTree
from .graph import (MapInstance, connected_components, cut_edges, find_bridges, is_connected,
                    is_two_edge_connected)
from .simplex import solve_covering_lp


class BudgetExceeded(RuntimeError):
    def __init__(self, lower: int, upper: int, nodes: int):
        super().__init__(f"budget exhausted after {nodes} nodes; optimum in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class SizeLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    opt_cost: int
    witness: frozenset[int]   # full edge set, lights included
    nodes_explored: int


def exact_opt(inst: MapInstance, budget: int | None = 5_000_000) -> OracleResult:
    """Minimum number of heavy edges E' with M + E' 2-edge-connected.

    Depth-first branch and bound. Lower bound per node: every light pair and
    every unmatched vertex is a component needing heavy degree 2 across its
    boundary, and every vertex needs 2 incident edges; each heavy edge serves
    two such demands at most. A branch is dropped as soon as the chosen plus
    undecided edges stop being 2-edge-connected.
    """
    g = inst.graph
    if not is_two_edge_connected(g):
        raise ValueError("instance is not 2-edge-connected")
    light = sorted(inst.light)
    heavy = sorted(inst.heavy)
    comp = list(range(g.n))
    for e in light:
        u, v = g.edges[e]
        comp[v] = comp[u] = min(u, v)
    comps = sorted(set(comp))
    light_deg = [0] * g.n
    for e in light:
        for v in g.edges[e]:
            light_deg[v] += 1

    best_cost = len(heavy)
    best_set = frozenset(heavy)
    nodes = 0

    def lower_bound(chosen: list[int]) -> int:
        deg = light_deg[:]
        cdeg = dict.fromkeys(comps, 0)
        for e in chosen:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
            if comp[u] != comp[v]:
                cdeg[comp[u]] += 1
                cdeg[comp[v]] += 1
        need = 0
        members: dict[int, list[int]] = {c: [] for c in comps}
        for v in range(g.n):
            members[comp[v]].append(v)
        for c in comps:
            vertex_need = sum(max(0, 2 - deg[v]) for v in members[c])
            need += max(max(0, 2 - cdeg[c]), vertex_need)
        return (need + 1) // 2

    def search(chosen: list[int], undecided: list[int]):
        nonlocal best_cost, best_set, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(lower_bound([]), best_cost, nodes)
        cost = len(chosen)
        if cost + lower_bound(chosen) >= best_cost:
            return
        current = light + chosen
        if is_two_edge_connected(g, current):
            best_cost, best_set = cost, frozenset(chosen)
            return
        if not undecided:
            return
        # branch on an undecided edge that can repair a weakest spot:
        # a bridge of the current graph, or a cut separating a component
        target = _branch_edge(g, current, undecided)
        rest = [e for e in undecided if e != target]
        search(chosen + [target], rest)
        if is_two_edge_connected(g, light + chosen + rest):
            search(chosen, rest)

    search([], heavy)
    return OracleResult(best_cost, frozenset(light) | best_set, nodes)


def _branch_edge(g, current: list[int], undecided: list[int]) -> int:
    """An undecided edge crossing a deficient cut of the current edge set."""
    if not is_connected(g, current):
        label = connected_components(g, current)
        side = {v for v in range(g.n) if label[v] == label[0]}
    else:
        b = find_bridges(g, current)[0]
        # side of the bridge containing its first endpoint
        rest = [e for e in current if e != b]
        label = connected_components(g, rest)
        u = g.edges[b][0]
        side = {v for v in range(g.n) if label[v] == label[u]}
    crossing = set(cut_edges(g, side))
    for e in undecided:
        if e in crossing:
            return e
    return undecided[0]


def _all_cuts(n: int):
    """Every proper nonempty side not containing vertex 0 (one per cut)."""
    others = range(1, n)
    for r in range(1, n):
        for side in itertools.combinations(others, r):
            yield frozenset(side)


def _certify(inst: MapInstance, cuts, x, y, w) -> bool:
    """Exact primal/dual feasibility with equal objectives."""
    g = inst.graph
    m = g.m
    if any(v < 0 or v > 1 for v in x):
        return False
    if any(v < 0 for v in y) or any(v < 0 for v in w):
        return False
    crossing = [cut_edges(g, s) for s in cuts]
    for edges in crossing:
        if sum((x[e] for e in edges), Fraction(0)) < 2:
            return False
    reduced = [Fraction(inst.weight[e]) + w[e] for e in range(m)]
    for i, edges in enumerate(crossing):
        if y[i]:
            for e in edges:
                reduced[e] -= y[i]
    if any(r < 0 for r in reduced):
        return False
    primal = sum((x[e] for e in inst.heavy), Fraction(0))
    dual = 2 * sum(y, Fraction(0)) - sum(w, Fraction(0))
    return primal == dual


def exact_cut_lp_enumeration(inst: MapInstance, max_n: int = 12) -> Fraction:
    """Optimum of the cut LP with all 2^(n-1) - 1 cuts written out.

    HiGHS solves it in floating point; primal and dual are then rounded to
    nearby rationals and certified exactly (feasibility of both plus equal
    objectives). If certification fails the exact simplex solves the same
    enumerated system instead.
    """
    import numpy as np
    from scipy.optimize import linprog

    g = inst.graph
    if g.n > max_n:
        raise SizeLimitExceeded(f"n = {g.n} exceeds the enumeration limit {max_n}")
    if not is_two_edge_connected(g):
        raise ValueError("instance is not 2-edge-connected")
    cuts = list(_all_cuts(g.n))
    m = g.m
    a = np.zeros((len(cuts), m))
    for i, side in enumerate(cuts):
        for e in cut_edges(g, side):
            a[i, e] = 1.0
    c = np.array([float(w) for w in inst.weight])
    res = linprog(c, A_ub=-a, b_ub=-2 * np.ones(len(cuts)), bounds=[(0, 1)] * m, method="highs")
    if res.status == 0:
        for limit in (12, 120, 10_000):
            x = [Fraction(float(v)).limit_denominator(limit) for v in res.x]
            y = [Fraction(float(-v)).limit_denominator(limit) for v in res.ineqlin.marginals]
            w = [Fraction(float(-v)).limit_denominator(limit) for v in res.upper.marginals]
            if _certify(inst, cuts, x, y, w):
                return sum((x[e] for e in inst.heavy), Fraction(0))
    rows = [({e: 1 for e in cut_edges(g, s)}, 2) for s in cuts]
    value, _ = solve_covering_lp(list(inst.weight), rows, upper=[1] * m)
    return value


def exact_uplink_cover(tree: DfsTree, max_back: int = 24) -> int:
    """Smallest number of back edges covering all tree edges, by enumeration."""
    back = sorted(tree.back_edges)
    if len(back) > max_back:
        raise SizeLimitExceeded(f"{len(back)} back edges exceed the limit {max_back}")
    index = {t: i for i, t in enumerate(sorted(tree.tree_edges))}
    full = (1 << len(index)) - 1
    masks = []
    for e in back:
        a, d = tree.back_edges[e]
        mask = 0
        v = d
        while v != a:
            mask |= 1 << index[tree.parent_edge[v]]
            v = tree.parent[v]
        masks.append(mask)
    if full == 0:
        return 0
    for k in range(1, len(masks) + 1):
        for combo in itertools.combinations(masks, k):
            acc = 0
            for mk in combo:
                acc |= mk
            if acc == full:
                return k
    raise ValueError("back edges do not cover the tree")
