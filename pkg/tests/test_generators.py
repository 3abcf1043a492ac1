from fractions import Fraction

import pytest

from mapaug.generators import gen_bad_dfs_instance, gen_gap_instance, gen_random_instance, random_suite
from mapaug.graph import validate_instance
from mapaug.oracle import exact_opt
from mapaug.pipeline import SolveOptions, solve


def test_gap_shape():
    inst = gen_gap_instance(1)
    assert inst.n == 6 and inst.m == 9
    assert len(inst.light) == 3 and len(inst.heavy) == 6
    assert validate_instance(inst).ok


@pytest.mark.parametrize("k", [2, 3, 4])
def test_chained_gap_copies_are_valid(k):
    inst = gen_gap_instance(k)
    assert inst.n == 6 * k
    assert len(inst.light) == 3 * k
    assert validate_instance(inst).ok


def test_chained_gap_costs():
    inst = gen_gap_instance(2)
    _, rep = solve(inst, 0, SolveOptions(oracle=True))
    assert rep.lp_cost <= rep.opt_cost <= rep.total_cost


def test_gap_rejects_bad_k():
    with pytest.raises(ValueError):
        gen_gap_instance(0)


@pytest.mark.parametrize("d", [2, 5, 10])
def test_bad_dfs_shape(d):
    inst = gen_bad_dfs_instance(d)
    assert inst.n == 2 * d + 2
    assert len(inst.light) == d + 1
    assert validate_instance(inst).ok


def test_bad_dfs_rejects_bad_depth():
    with pytest.raises(ValueError):
        gen_bad_dfs_instance(1)


def test_bad_dfs_deep_unguided_ratio():
    # the tour has d + 1 heavy edges, so the unguided total alone fixes the ratio
    d = 20
    inst = gen_bad_dfs_instance(d)
    _, plain = solve(inst, 0, SolveOptions(guided=False))
    _, guided = solve(inst, 0, SolveOptions())
    assert plain.total_cost == 2 * d + 1
    assert guided.total_cost == d + 1
    assert Fraction(plain.total_cost, d + 1) >= Fraction(7, 4)


def test_bad_dfs_small_opt():
    assert exact_opt(gen_bad_dfs_instance(3)).opt_cost == 4


@pytest.mark.parametrize("seed", range(30))
def test_random_instances_are_valid(seed):
    inst = gen_random_instance(3 + seed % 10, seed % 7, (seed % 5) / 4, seed)
    assert validate_instance(inst).ok
    assert len(inst.light) <= int((seed % 5) / 4 * inst.n / 2)


def test_random_is_deterministic():
    a = gen_random_instance(12, 8, 0.5, 99)
    b = gen_random_instance(12, 8, 0.5, 99)
    assert a == b
    assert gen_random_instance(12, 8, 0.5, 100) != a


def test_full_matching():
    # greedy relabelling may stop short of a perfect matching
    for seed in range(10):
        inst = gen_random_instance(10, 4, 1.0, seed)
        assert 1 <= len(inst.light) <= 5
        assert validate_instance(inst).ok


def test_random_rejects_tiny_graphs():
    with pytest.raises(ValueError):
        gen_random_instance(2, 0, 0.0, 1)


def test_random_suite():
    suite = random_suite(20, range(4, 9), 5)
    assert len(suite) == 20
    assert [s for s, _ in suite] == [s for s, _ in random_suite(20, range(4, 9), 5)]
    assert all(4 <= inst.n <= 8 for _, inst in suite)
