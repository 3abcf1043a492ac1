"""LP-guided depth-first search and tree-cut diagnostics.

Edges of a rooted tree are written ``uv`` with ``u`` the parent; the tree cut
of ``uv`` is delta(T_v), the edges leaving the subtree under ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .graph import EdgeVector, MapInstance


class SupportNotConnected(ValueError):
    pass


@dataclass(frozen=True)
class DfsTree:
    root: int
    order: tuple[int, ...]              # vertices in visit order
    parent: dict[int, int]              # vertex -> parent vertex (no root entry)
    parent_edge: dict[int, int]         # vertex -> id of the tree edge above it
    dfs_index: tuple[int, ...]
    depth: tuple[int, ...]
    subtree_size: tuple[int, ...]
    tree_edges: frozenset[int]
    back_edges: dict[int, tuple[int, int]]  # edge id -> (ancestor, descendant)

    @property
    def n(self) -> int:
        return len(self.order)

    def child_of(self, e: int) -> int:
        return self._child[e]

    def __post_init__(self):
        object.__setattr__(self, "_child", {e: v for v, e in self.parent_edge.items()})

    def is_ancestor(self, a: int, v: int) -> bool:
        """``a`` is an ancestor of ``v`` or equal to it."""
        return self.dfs_index[a] <= self.dfs_index[v] < self.dfs_index[a] + self.subtree_size[a]

    def is_leaf(self, v: int) -> bool:
        return self.subtree_size[v] == 1

    def children(self, v: int) -> list[int]:
        return [w for w in self.order if self.parent.get(w) == v]

    def path_edges(self, ancestor: int, descendant: int) -> list[int]:
        """Tree edges on the path from ``descendant`` up to ``ancestor``."""
        out = []
        v = descendant
        while v != ancestor:
            out.append(self.parent_edge[v])
            v = self.parent[v]
        return out

    def subtree(self, v: int) -> list[int]:
        i = self.dfs_index[v]
        return list(self.order[i:i + self.subtree_size[v]])


def _run_dfs(inst: MapInstance, edge_ids: Iterable[int], root: int,
             key: Callable[[int, int, int], tuple]) -> DfsTree:
    """Generic iterative DFS; at each step takes the available edge minimizing ``key``.

    ``key(v, w, e)`` ranks the edge ``e`` from the current vertex ``v`` to an
    unvisited ``w``.
    """
    g = inst.graph
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} is not a vertex")
    edge_ids = sorted(set(edge_ids))
    adj = g.incidence(edge_ids)
    visited = [False] * g.n
    dfs_index = [-1] * g.n
    depth = [0] * g.n
    parent: dict[int, int] = {}
    parent_edge: dict[int, int] = {}
    order = [root]
    visited[root] = True
    dfs_index[root] = 0
    stack = [root]
    while stack:
        v = stack[-1]
        best = None
        best_key = None
        for w, e in adj[v]:
            if visited[w]:
                continue
            k = key(v, w, e)
            if best is None or k < best_key:
                best, best_key = (w, e), k
        if best is None:
            stack.pop()
            continue
        w, e = best
        visited[w] = True
        dfs_index[w] = len(order)
        order.append(w)
        depth[w] = depth[v] + 1
        parent[w] = v
        parent_edge[w] = e
        stack.append(w)
    if len(order) != g.n:
        raise SupportNotConnected(f"DFS from {root} reached {len(order)} of {g.n} vertices")

    size = [1] * g.n
    for v in reversed(order):
        if v in parent:
            size[parent[v]] += size[v]
    tree = frozenset(parent_edge.values())
    back = {}
    for e in edge_ids:
        if e in tree:
            continue
        u, v = g.edges[e]
        if u == v:
            continue
        a, d = (u, v) if depth[u] < depth[v] else (v, u)
        back[e] = (a, d)
    result = DfsTree(root, tuple(order), parent, parent_edge, tuple(dfs_index),
                     tuple(depth), tuple(size), tree, back)
    for e, (a, d) in back.items():
        if not result.is_ancestor(a, d):
            raise AssertionError(f"edge {e} is a cross edge; DFS invariant broken")
    return result


def guided_dfs(inst: MapInstance, x, root: int = 0) -> DfsTree:
    """DFS over the support of ``x``: light edges first, then the largest ``x_e``.

    ``x`` is an ``LpSolution`` or a plain edge vector. Light edges are always
    eligible even when the LP leaves them at 0, so the tree holds all of M.
    Ties on ``x_e`` go to the smallest edge id.
    """
    xs = getattr(x, "x", x)
    allowed = {e for e in range(inst.m) if xs[e] > 0} | set(inst.light)
    weight = inst.weight
    return _run_dfs(inst, allowed, root, lambda v, w, e: (weight[e], -xs[e], e))


def unguided_dfs(inst: MapInstance, root: int = 0) -> DfsTree:
    """Plain DFS over all of G: smallest neighbor id first, then smallest edge id."""
    return _run_dfs(inst, range(inst.m), root, lambda v, w, e: (w, e))


def tree_cut_values(inst: MapInstance, tree: DfsTree, x: EdgeVector) -> dict[int, Fraction]:
    """x(delta(T_v)) for every tree edge, by one bottom-up pass.

    Uses cut(T_v) = sum of x-degrees in T_v minus twice the x-weight of edges
    with both ends in T_v. Every positive edge must be a tree or back edge,
    so its lower end-point's lowest common ancestor is its upper endpoint.
    """
    xs = getattr(x, "x", x)
    n = inst.n
    deg = [Fraction(0)] * n
    inner = [Fraction(0)] * n
    for e, (u, v) in enumerate(inst.graph.edges):
        val = Fraction(xs[e])
        if not val or u == v:
            continue
        deg[u] += val
        deg[v] += val
        if tree.is_ancestor(u, v):
            inner[u] += val
        elif tree.is_ancestor(v, u):
            inner[v] += val
        else:
            raise ValueError(f"edge {e} with positive value is a cross edge of the tree")
    acc = [deg[v] - 2 * inner[v] for v in range(n)]
    for v in reversed(tree.order):
        if v in tree.parent:
            acc[tree.parent[v]] += acc[v]
    return {tree.parent_edge[v]: acc[v] for v in tree.parent_edge}


@dataclass(frozen=True)
class TightnessReport:
    gamma: Fraction
    tree_cut_value: dict[int, Fraction]
    tight: frozenset[int]
    s0_light_tight: frozenset[int]
    s1_heavy_tight: frozenset[int]
    s0_plus: frozenset[int]
    s0_minus: frozenset[int]

    @property
    def tight_count(self) -> int:
        return len(self.tight)


def tightness_report(inst: MapInstance, tree: DfsTree, x: EdgeVector, gamma) -> TightnessReport:
    """Classify tree edges by x(T(e)) - x_e < 1 + gamma, in exact arithmetic."""
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    xs = getattr(x, "x", x)
    values = tree_cut_values(inst, tree, xs)
    tight = frozenset(e for e, c in values.items() if c - xs[e] < 1 + gamma)
    s0 = frozenset(e for e in tight if inst.is_light(e))
    s1 = tight - s0
    minus = frozenset(e for e in s0 if tree.is_leaf(tree.child_of(e)))
    return TightnessReport(gamma, values, tight, s0, s1, s0 - minus, minus)


def node_cut_check(inst: MapInstance, tree: DfsTree, x: EdgeVector, alpha, alpha_prime) -> list[int]:
    """Light alpha-tight non-leaf tree edges uv whose v breaks the child-edge bound.

    For each such edge with v not alpha'-fractional, some tree edge from v to a
    child must carry at least (1 - alpha) * alpha'. Returns the violators.
    """
    from .cutlp import alpha_fractional_vertices

    alpha, alpha_prime = Fraction(alpha), Fraction(alpha_prime)
    if alpha <= 0 or alpha_prime <= 0:
        raise ValueError("alpha and alpha_prime must be positive")
    xs = getattr(x, "x", x)
    report = tightness_report(inst, tree, xs, alpha)
    fractional = set(alpha_fractional_vertices(inst.graph, xs, alpha_prime))
    threshold = (1 - alpha) * alpha_prime
    bad = []
    for e in sorted(report.s0_plus):
        v = tree.child_of(e)
        if v in fractional:
            continue
        if not any(xs[tree.parent_edge[w]] >= threshold for w in tree.children(v)):
            bad.append(e)
    return bad
