"""The cut LP of a MAP instance, solved exactly by cutting planes.

    min  sum_{e heavy} x_e
    s.t. x(delta(S)) >= 2   for every proper nonempty S
         0 <= x_e <= 1

The loop starts from the n degree cuts and adds one globally minimum cut
(Stoer-Wagner over the rational capacities x) per round until none is
below 2. The final basic solution is an extreme point of the full LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import EdgeVector, MapInstance, MultiGraph, cut_edges, is_two_edge_connected
from .simplex import DualSimplex, InfeasibleLP, rank


class InfeasibleInstance(ValueError):
    """The cut LP is empty: the graph is not 2-edge-connected."""


@dataclass(frozen=True)
class Cut:
    side: frozenset[int]
    value: Fraction


@dataclass(frozen=True)
class BasisCertificate:
    """The |E| tight constraints that pin down an extreme point.

    ``cuts`` are sides S with x(delta(S)) = 2, ``at_zero`` edge ids with
    x_e = 0, ``at_one`` edge ids with x_e = 1.
    """
    cuts: tuple[frozenset[int], ...]
    at_zero: frozenset[int]
    at_one: frozenset[int]

    def size(self) -> int:
        return len(self.cuts) + len(self.at_zero) + len(self.at_one)

    def matrix(self, g: MultiGraph) -> list[list[int]]:
        rows = []
        for side in self.cuts:
            crossing = set(cut_edges(g, side))
            rows.append([1 if e in crossing else 0 for e in range(g.m)])
        for e in sorted(self.at_zero | self.at_one):
            rows.append([1 if f == e else 0 for f in range(g.m)])
        return rows


@dataclass(frozen=True)
class LpSolution:
    x: tuple[Fraction, ...]
    objective: Fraction
    support: frozenset[int]
    basis_certificate: BasisCertificate
    rounds: int = 0
    pivots: int = 0

    def is_basic(self, g: MultiGraph) -> bool:
        """True iff the certificate rows have full column rank |E|."""
        return rank(self.basis_certificate.matrix(g)) == g.m


def _min_cut(n: int, weights: list[list]) -> tuple[object, list[int]]:
    """Stoer-Wagner on a dense symmetric weight matrix; returns (value, side).

    The first phase cut attaining the final minimum is the one returned.
    """
    w = [row[:] for row in weights]
    groups = [[v] for v in range(n)]
    alive = list(range(n))
    best_value = None
    best_side: list[int] = []
    while len(alive) > 1:
        start = alive[0]
        added = [start]
        conn = {v: w[start][v] for v in alive if v != start}
        prev = start
        while conn:
            # maximum adjacency order; ties to the smallest vertex label
            t = max(conn, key=lambda v: (conn[v], -v))
            cut_of_phase = conn.pop(t)
            added.append(t)
            for v in conn:
                conn[v] += w[t][v]
            if not conn:
                if best_value is None or cut_of_phase < best_value:
                    best_value = cut_of_phase
                    best_side = list(groups[t])
                # merge t into prev
                s = prev
                groups[s].extend(groups[t])
                for v in alive:
                    if v != s and v != t:
                        w[s][v] += w[t][v]
                        w[v][s] = w[s][v]
                alive.remove(t)
            prev = t
    return best_value, sorted(best_side)


def separate(g: MultiGraph, x: EdgeVector) -> Cut | None:
    """A global minimum cut under capacities ``x`` if its value is below 2."""
    if g.n < 2:
        return None
    zero = Fraction(0)
    w = [[zero] * g.n for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if u != v and x[e]:
            w[u][v] += Fraction(x[e])
            w[v][u] = w[u][v]
    value, side = _min_cut(g.n, w)
    if value < 2:
        return Cut(frozenset(side), Fraction(value))
    return None


def _normalize(side: Iterable[int], n: int) -> frozenset[int]:
    """Represent a cut by the side not containing vertex 0."""
    s = frozenset(side)
    return frozenset(range(n)) - s if 0 in s else s


def solve_cut_lp(inst: MapInstance, max_rounds: int = 10_000) -> LpSolution:
    """Optimal extreme point of the cut LP, in exact arithmetic."""
    g = inst.graph
    if not is_two_edge_connected(g):
        raise InfeasibleInstance("graph is not 2-edge-connected; the cut LP is infeasible")
    lp = DualSimplex([inst.weight[e] for e in range(g.m)])
    row_side: dict[int, frozenset[int]] = {}
    row_bound: dict[int, int] = {}
    seen: set[frozenset[int]] = set()

    def add_cut(side, initial=False):
        side = _normalize(side, g.n)
        if side in seen:
            if initial:
                return
            raise RuntimeError(f"separation returned a cut already in the LP: {sorted(side)}")
        seen.add(side)
        r = lp.add_row({e: 1 for e in cut_edges(g, side)}, 2)
        row_side[r] = side

    for v in range(g.n):
        add_cut({v}, initial=True)
    for e in range(g.m):
        row_bound[lp.add_row({e: -1}, -1)] = e

    rounds = 0
    try:
        while True:
            lp.reoptimize()
            rounds += 1
            cut = separate(g, lp.solution())
            if cut is None:
                break
            if rounds >= max_rounds:
                raise RuntimeError("cutting-plane round limit reached")
            add_cut(cut.side)
    except InfeasibleLP as exc:
        raise InfeasibleInstance(str(exc)) from exc

    x = tuple(lp.solution())
    cuts, at_zero, at_one = [], set(), set()
    for k in lp.nonbasic():
        if k < g.m:
            at_zero.add(k)
        else:
            r = k - g.m
            if r in row_side:
                cuts.append(row_side[r])
            else:
                at_one.add(row_bound[r])
    cert = BasisCertificate(tuple(sorted(cuts, key=lambda s: sorted(s))),
                            frozenset(at_zero), frozenset(at_one))
    objective = sum((x[e] for e in inst.heavy), Fraction(0))
    return LpSolution(
        x=x,
        objective=objective,
        support=frozenset(e for e in range(g.m) if x[e] > 0),
        basis_certificate=cert,
        rounds=rounds,
        pivots=lp.pivots,
    )


def fractional_edges(x: EdgeVector) -> list[int]:
    return [e for e, v in enumerate(x) if 0 < v < 1]


def alpha_fractional_vertices(g: MultiGraph, x: EdgeVector, alpha) -> list[int]:
    """Vertices with strictly more than ``1/alpha`` incident fractional edges."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    count = [0] * g.n
    for e in fractional_edges(x):
        u, v = g.edges[e]
        count[u] += 1
        count[v] += 1
    limit = 1 / alpha
    return [v for v in range(g.n) if count[v] > limit]
