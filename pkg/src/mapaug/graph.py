"""Multigraphs, MAP instances and connectivity primitives.

Vertices are dense integers ``0..n-1``. Edges are identified by their
position in the edge list, so parallel edges stay distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

LIGHT = 0
HEAVY = 1

# x vectors are plain tuples of Fractions indexed by edge id
EdgeVector = Sequence[Fraction]


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {i} = ({u}, {v}) has an endpoint out of range")
        object.__setattr__(self, "edges", edges)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def incidence(self, edge_ids: Iterable[int] | None = None) -> list[list[tuple[int, int]]]:
        """Adjacency lists of ``(neighbor, edge id)`` pairs, sorted by edge id.

        Self-loops are skipped. Restrict to ``edge_ids`` when given.
        """
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        ids = range(self.m) if edge_ids is None else sorted(edge_ids)
        for e in ids:
            u, v = self.edges[e]
            if u == v:
                continue
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj

    def subgraph(self, edge_ids: Iterable[int]) -> "MultiGraph":
        return MultiGraph(self.vertex_count, tuple(self.edges[e] for e in sorted(edge_ids)))


@dataclass(frozen=True)
class MapInstance:
    graph: MultiGraph
    weight: tuple[int, ...]
    light: frozenset[int] = field(init=False)
    heavy: frozenset[int] = field(init=False)

    def __post_init__(self):
        weight = tuple(int(w) for w in self.weight)
        if len(weight) != self.graph.m:
            raise ValueError("one weight per edge is required")
        if any(w not in (LIGHT, HEAVY) for w in weight):
            raise ValueError("edge weights must be 0 or 1")
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "light", frozenset(e for e, w in enumerate(weight) if w == LIGHT))
        object.__setattr__(self, "heavy", frozenset(e for e, w in enumerate(weight) if w == HEAVY))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "MapInstance":
        """Build an instance from ``(u, v, w)`` triples; order fixes edge ids."""
        edges = list(edges)
        graph = MultiGraph(n, tuple((u, v) for u, v, _ in edges))
        return cls(graph, tuple(w for _, _, w in edges))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def is_light(self, e: int) -> bool:
        return self.weight[e] == LIGHT

    def light_partner(self) -> dict[int, int]:
        """Vertex -> id of its light edge (assumes the lights form a matching)."""
        partner = {}
        for e in sorted(self.light):
            u, v = self.graph.edges[e]
            partner[u] = e
            partner[v] = e
        return partner

    def cost(self, edge_ids: Iterable[int]) -> int:
        return sum(self.weight[e] for e in set(edge_ids))


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def connected_components(g: MultiGraph, edge_ids: Iterable[int] | None = None) -> list[int]:
    """Component label per vertex (labels are the smallest vertex of each component)."""
    label = [-1] * g.n
    adj = g.incidence(edge_ids)
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = s
        stack = [s]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if label[w] == -1:
                    label[w] = s
                    stack.append(w)
    return label


def is_connected(g: MultiGraph, edge_ids: Iterable[int] | None = None) -> bool:
    return g.n <= 1 or len(set(connected_components(g, edge_ids))) == 1


def find_bridges(g: MultiGraph, edge_ids: Iterable[int] | None = None) -> list[int]:
    """Edge ids of all bridges, via one iterative low-link DFS per component.

    Parallel edges are never bridges; the DFS skips only the exact edge id it
    arrived by, not every edge to the parent.
    """
    adj = g.incidence(edge_ids)
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = []
    timer = 0
    for s in range(g.n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = timer
        timer += 1
        # frames: (vertex, edge used to enter, next adjacency position)
        stack = [(s, -1, 0)]
        while stack:
            v, via, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, via, i + 1)
                w, e = adj[v][i]
                if e == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.append(via)
    return sorted(bridges)


def is_two_edge_connected(g: MultiGraph, edge_ids: Iterable[int] | None = None) -> bool:
    """True iff the (sub)graph is connected and bridgeless.

    A single vertex counts as 2-edge-connected; the empty graph does too.
    """
    if edge_ids is not None:
        edge_ids = list(edge_ids)
    return is_connected(g, edge_ids) and not find_bridges(g, edge_ids)


def cut_edges(g: MultiGraph, side: Iterable[int]) -> list[int]:
    s = set(side)
    return [e for e, (u, v) in enumerate(g.edges) if (u in s) != (v in s)]


def cut_weight(g: MultiGraph, side: Iterable[int], x: EdgeVector) -> Fraction:
    """Sum of ``x`` over the edges with exactly one endpoint in ``side``."""
    s = frozenset(side)
    if not s or len(s) >= g.n or not s <= frozenset(range(g.n)):
        raise ValueError("side must be a proper nonempty vertex subset")
    return sum((Fraction(x[e]) for e in cut_edges(g, s)), Fraction(0))


def validate_instance(inst: MapInstance) -> ValidationReport:
    """Collect every reason ``inst`` is not a usable MAP instance."""
    g = inst.graph
    problems = []
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            problems.append(f"self-loop: edge {e} at vertex {u}")
    seen: dict[int, int] = {}
    for e in sorted(inst.light):
        for v in g.edges[e]:
            if v in seen:
                problems.append(f"light edges {seen[v]} and {e} share vertex {v}")
            else:
                seen[v] = e
    if not is_connected(g):
        problems.append("graph is disconnected")
    bridges = find_bridges(g)
    if bridges:
        problems.append("bridges: " + ", ".join(str(e) for e in bridges))
    return ValidationReport(tuple(problems))
