from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_min_cut, small_suite
from mapaug.cutlp import (InfeasibleInstance, alpha_fractional_vertices, fractional_edges, separate,
                          solve_cut_lp)
from mapaug.generators import gen_random_instance
from mapaug.graph import HEAVY, MapInstance, cut_weight, is_two_edge_connected
from mapaug.oracle import exact_cut_lp_enumeration


def test_four_cycle(c4):
    sol = solve_cut_lp(c4)
    assert sol.objective == 2
    assert sol.x == (1, 1, 1, 1)


def test_triangle(triangle):
    sol = solve_cut_lp(triangle)
    assert sol.objective == 3
    assert sol.x == (1, 1, 1)


def test_gap_instance_is_half_integral(gap, gap_x):
    sol = solve_cut_lp(gap)
    assert sol.objective == 3
    # the LP optimum is unique here: each light pair carries heavy degree exactly 2
    assert sol.x == gap_x
    assert sol.is_basic(gap.graph)


def test_infeasible_instance_rejected():
    path = MapInstance.from_edges(3, [(0, 1, HEAVY), (1, 2, HEAVY)])
    with pytest.raises(InfeasibleInstance):
        solve_cut_lp(path)


def test_separate_examples(c4, gap, gap_x):
    assert separate(c4.graph, [1] * 4) is None
    cut = separate(c4.graph, [0] * 4)
    assert cut is not None and cut.value == 0
    assert separate(gap.graph, gap_x) is None


def test_separate_finds_violated_cut(gap):
    x = [Fraction(1, 2)] * 6 + [1, 1, Fraction(1, 2)]
    cut = separate(gap.graph, x)
    assert cut is not None and cut.value < 2
    assert cut_weight(gap.graph, cut.side, x) == cut.value


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_separate_value_is_global_min_cut(data):
    n = data.draw(st.integers(2, 7))
    inst = gen_random_instance(max(n, 3), data.draw(st.integers(0, 6)), 0.5, data.draw(st.integers(0, 10**6)))
    g = inst.graph
    x = data.draw(st.lists(st.fractions(0, 1, max_denominator=6), min_size=g.m, max_size=g.m))
    cut = separate(g, x)
    best = brute_min_cut(g, x)
    if best >= 2:
        assert cut is None
    else:
        assert cut.value == best
        assert cut_weight(g, cut.side, x) == best


def test_fractional_edges_examples(gap, gap_x):
    assert fractional_edges([1, 1, 1]) == []
    assert fractional_edges(gap_x) == [0, 1, 2, 3, 4, 5]


def test_alpha_fractional_vertices_examples(gap, gap_x, c4):
    assert alpha_fractional_vertices(c4.graph, [1] * 4, Fraction(1, 4)) == []
    assert alpha_fractional_vertices(gap.graph, gap_x, Fraction(1, 4)) == []
    # every gap vertex has 2 fractional edges: more than 1/alpha once alpha > 1/2
    assert alpha_fractional_vertices(gap.graph, gap_x, Fraction(1)) == list(range(6))
    with pytest.raises(ValueError):
        alpha_fractional_vertices(gap.graph, gap_x, 0)


SUITE = small_suite(40, range(3, 11), seed=17)


@pytest.mark.parametrize("seed, inst", SUITE, ids=[str(s) for s, _ in SUITE])
def test_cutting_planes_reach_the_enumerated_optimum(seed, inst):
    sol = solve_cut_lp(inst)
    assert sol.objective == exact_cut_lp_enumeration(inst)
    assert sol.objective == sum(sol.x[e] for e in inst.heavy)
    assert sol.objective >= inst.n - len(inst.light)
    assert brute_min_cut(inst.graph, sol.x) >= 2
    assert is_two_edge_connected(inst.graph, sol.support)
    assert sol.is_basic(inst.graph)
    assert sol.basis_certificate.size() == inst.m


@pytest.mark.parametrize("seed, inst", small_suite(60, range(6, 15), seed=5))
def test_extreme_point_structure(seed, inst):
    sol = solve_cut_lp(inst)
    assert len(fractional_edges(sol.x)) <= 2 * inst.n - 1
    for alpha in (Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)):
        assert len(alpha_fractional_vertices(inst.graph, sol.x, alpha)) <= 4 * alpha * inst.n


def test_certificate_rows_are_tight(gap):
    sol = solve_cut_lp(gap)
    cert = sol.basis_certificate
    for side in cert.cuts:
        assert cut_weight(gap.graph, side, sol.x) == 2
    assert all(sol.x[e] == 0 for e in cert.at_zero)
    assert all(sol.x[e] == 1 for e in cert.at_one)


def test_larger_instance_solves():
    inst = gen_random_instance(30, 20, 0.8, 3)
    sol = solve_cut_lp(inst)
    assert separate(inst.graph, sol.x) is None
    assert sol.is_basic(inst.graph)
