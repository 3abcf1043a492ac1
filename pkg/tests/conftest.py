import itertools
from fractions import Fraction

import pytest

from mapaug.generators import gen_gap_instance, random_suite
from mapaug.graph import HEAVY, LIGHT, MapInstance, is_connected

# gap instance vertex names
A1, A2, A3, B1, B2, B3 = range(6)


@pytest.fixture
def c4():
    # 0-1 light, 1-2 heavy, 2-3 light, 3-0 heavy
    return MapInstance.from_edges(4, [(0, 1, LIGHT), (1, 2, HEAVY), (2, 3, LIGHT), (3, 0, HEAVY)])


@pytest.fixture
def triangle():
    return MapInstance.from_edges(3, [(0, 1, HEAVY), (1, 2, HEAVY), (0, 2, HEAVY)])


@pytest.fixture
def gap():
    return gen_gap_instance(1)


@pytest.fixture
def gap_x():
    return tuple([Fraction(1, 2)] * 6 + [Fraction(1)] * 3)


def edge_id(inst, u, v):
    """Smallest edge id joining u and v."""
    return next(e for e, (a, b) in enumerate(inst.graph.edges) if {a, b} == {u, v})


def all_sides(n):
    """Every proper nonempty vertex subset, once per cut."""
    for r in range(1, n):
        for side in itertools.combinations(range(1, n), r):
            yield set(side)


def brute_min_cut(g, x):
    best = None
    for side in all_sides(g.n):
        val = sum((Fraction(x[e]) for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side)),
                  Fraction(0))
        if best is None or val < best:
            best = val
    return best


def brute_bridges(g, edge_ids=None):
    ids = list(range(g.m)) if edge_ids is None else list(edge_ids)
    if not is_connected(g, ids):
        return None
    return sorted(e for e in ids if not is_connected(g, [f for f in ids if f != e]))


def small_suite(count, sizes=range(4, 11), seed=0):
    return random_suite(count, sizes, seed)
