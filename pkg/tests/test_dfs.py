from fractions import Fraction

import pytest

from conftest import A1, A2, A3, B1, B2, B3, edge_id, small_suite
from mapaug.cutlp import solve_cut_lp
from mapaug.dfs import (SupportNotConnected, guided_dfs, node_cut_check, tightness_report,
                        tree_cut_values, unguided_dfs)
from mapaug.generators import gen_bad_dfs_instance
from mapaug.graph import HEAVY, MapInstance, cut_weight

GAMMA = Fraction(1, 1000)


def test_four_cycle_tree(c4):
    tree = guided_dfs(c4, [1] * 4, 0)
    assert tree.tree_edges == {0, 1, 2}
    assert tree.back_edges == {3: (0, 3)}
    assert tree.order == (0, 1, 2, 3)


def test_gap_tree(gap, gap_x):
    tree = guided_dfs(gap, gap_x, A1)
    assert tree.order == (A1, B1, B2, A2, A3, B3)
    back = {edge_id(gap, A1, A2), edge_id(gap, A1, A3), edge_id(gap, B1, B3), edge_id(gap, B2, B3)}
    assert set(tree.back_edges) == back
    assert gap.cost(tree.tree_edges) == 2 == gap.n - 1 - len(gap.light)


def test_triangle_tree(triangle):
    tree = guided_dfs(triangle, [1, 1, 1], 0)
    assert tree.tree_edges == {0, 1}
    assert set(tree.back_edges) == {2}


def test_heavy_ties_go_to_smallest_edge_id():
    # two parallel heavy routes out of 0 with equal value
    inst = MapInstance.from_edges(3, [(0, 2, HEAVY), (0, 1, HEAVY), (1, 2, HEAVY)])
    tree = guided_dfs(inst, [1, 1, 1], 0)
    assert tree.parent_edge[2] == 0


def test_larger_value_beats_smaller_id():
    inst = MapInstance.from_edges(3, [(0, 2, HEAVY), (0, 1, HEAVY), (1, 2, HEAVY)])
    tree = guided_dfs(inst, [Fraction(1, 2), 1, 1], 0)
    assert tree.order == (0, 1, 2)


def test_disconnected_support_raises(c4):
    with pytest.raises(SupportNotConnected):
        guided_dfs(c4, [0, 0, 0, 0], 1)  # lights only: two components


def test_unguided_walks_the_bad_spine():
    inst = gen_bad_dfs_instance(3)
    tree = unguided_dfs(inst, 0)
    assert tree.order == tuple(range(8))
    assert inst.light <= tree.tree_edges
    assert len(tree.back_edges) == 4


def test_tree_cut_values_examples(c4, gap, gap_x):
    tree = guided_dfs(c4, [1] * 4, 0)
    assert tree_cut_values(c4, tree, [1] * 4) == {0: 2, 1: 2, 2: 2}
    gtree = guided_dfs(gap, gap_x, A1)
    values = tree_cut_values(gap, gtree, gap_x)
    assert values[edge_id(gap, A1, B1)] == 2
    assert values[edge_id(gap, B2, A2)] == 3


def test_tightness_four_cycle(c4):
    tree = guided_dfs(c4, [1] * 4, 0)
    rep = tightness_report(c4, tree, [1] * 4, GAMMA)
    assert rep.tight == {0, 1, 2}
    assert rep.s0_light_tight == {0, 2}
    assert rep.s1_heavy_tight == {1}
    assert rep.s0_minus == {2}
    assert rep.s0_plus == {0}


def test_tightness_gap(gap, gap_x):
    tree = guided_dfs(gap, gap_x, A1)
    rep = tightness_report(gap, tree, gap_x, GAMMA)
    assert edge_id(gap, A1, B1) in rep.tight
    # heavy tree edges sit at 2 - 1/2, the middle rung at 3 - 1
    assert rep.tight == {edge_id(gap, A1, B1), edge_id(gap, A3, B3)}
    assert rep.s0_minus == {edge_id(gap, A3, B3)}


def test_node_cut_check_examples(c4, triangle):
    tree = guided_dfs(c4, [1] * 4, 0)
    assert node_cut_check(c4, tree, [1] * 4, GAMMA, GAMMA / 16) == []
    ttree = guided_dfs(triangle, [1] * 3, 0)
    assert node_cut_check(triangle, ttree, [1] * 3, GAMMA, GAMMA / 16) == []


SUITE = small_suite(60, range(4, 13), seed=3)


@pytest.mark.parametrize("seed, inst", SUITE, ids=[str(s) for s, _ in SUITE])
def test_guided_tree_invariants(seed, inst):
    sol = solve_cut_lp(inst)
    tree = guided_dfs(inst, sol, 0)
    assert inst.light <= tree.tree_edges
    assert inst.cost(tree.tree_edges) == inst.n - 1 - len(inst.light)
    assert tree.tree_edges | set(tree.back_edges) == sol.support | inst.light
    for e, (a, d) in tree.back_edges.items():
        assert tree.is_ancestor(a, d) and a != d
    assert guided_dfs(inst, sol, 0) == tree

    values = tree_cut_values(inst, tree, sol.x)
    for t, val in values.items():
        assert val == cut_weight(inst.graph, tree.subtree(tree.child_of(t)), sol.x)
        assert val >= 2
        covering = sum((sol.x[e] for e, (a, d) in tree.back_edges.items()
                        if t in tree.path_edges(a, d)), Fraction(0))
        assert covering == val - sol.x[t] >= 1

    rep = tightness_report(inst, tree, sol.x, GAMMA)
    assert rep.tight_count == len(rep.s0_light_tight) + len(rep.s1_heavy_tight)
    assert rep.s0_plus.isdisjoint(rep.s0_minus)
    assert node_cut_check(inst, tree, sol.x, GAMMA, GAMMA / 16) == []
