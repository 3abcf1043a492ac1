from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from mapaug.simplex import DualSimplex, InfeasibleLP, rank, solve_covering_lp


def test_small_covering_lp():
    # min x0 + x1, x0 + 2 x1 >= 3, 3 x0 + x1 >= 4 -> x = (1, 1), value 2
    value, x = solve_covering_lp([1, 1], [({0: 1, 1: 2}, 3), ({0: 3, 1: 1}, 4)])
    assert value == 2
    assert x == [1, 1]


def test_fractional_optimum_is_exact():
    # min x0 + x1 + x2, pairwise sums >= 1 -> all 1/2
    rows = [({0: 1, 1: 1}, 1), ({1: 1, 2: 1}, 1), ({0: 1, 2: 1}, 1)]
    value, x = solve_covering_lp([1, 1, 1], rows)
    assert value == Fraction(3, 2)
    assert x == [Fraction(1, 2)] * 3


def test_infeasible_detected():
    with pytest.raises(InfeasibleLP):
        solve_covering_lp([1], [({0: 1}, 2)], upper=[1])


def test_negative_costs_rejected():
    with pytest.raises(ValueError):
        DualSimplex([-1])


def test_rows_added_after_solving():
    lp = DualSimplex([1, 2])
    lp.add_row({0: 1, 1: 1}, 1)
    lp.reoptimize()
    assert lp.objective() == 1
    lp.add_row({0: -1}, Fraction(-1, 3))  # x0 <= 1/3
    lp.reoptimize()
    assert lp.solution() == [Fraction(1, 3), Fraction(2, 3)]
    assert lp.objective() == Fraction(5, 3)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_matches_highs_on_random_covering_lps(data):
    nvar = data.draw(st.integers(1, 5))
    nrow = data.draw(st.integers(1, 5))
    costs = data.draw(st.lists(st.integers(0, 4), min_size=nvar, max_size=nvar))
    a = data.draw(st.lists(st.lists(st.integers(0, 3), min_size=nvar, max_size=nvar),
                           min_size=nrow, max_size=nrow))
    b = data.draw(st.lists(st.integers(0, 4), min_size=nrow, max_size=nrow))
    rows = [({j: v for j, v in enumerate(r) if v}, bi) for r, bi in zip(a, b)]
    ref = linprog(costs, A_ub=-np.array(a, dtype=float), b_ub=-np.array(b, dtype=float),
                  bounds=[(0, 2)] * nvar, method="highs")
    if ref.status == 2:
        with pytest.raises(InfeasibleLP):
            solve_covering_lp(costs, rows, upper=[2] * nvar)
        return
    value, x = solve_covering_lp(costs, rows, upper=[2] * nvar)
    assert float(value) == pytest.approx(ref.fun, abs=1e-9)
    assert all(sum(r.get(j, 0) * x[j] for j in range(nvar)) >= bi for r, bi in rows)
    assert all(0 <= v <= 2 for v in x)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_numpy(m):
    assert rank(m) == np.linalg.matrix_rank(np.array(m, dtype=float))
