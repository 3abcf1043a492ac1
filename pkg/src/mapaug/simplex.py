"""Exact dual simplex for covering LPs with non-negative costs.

Solves ``min c.x  s.t.  A x >= b,  x >= 0`` where ``c >= 0``. With every
row written as ``-a.x + s = -b`` the all-slack basis is dual feasible from
the start, and stays dual feasible when new rows are appended, which is
exactly what a cutting-plane loop needs.

Arithmetic is exact. ``gmpy2.mpq`` is used when available, ``Fraction``
otherwise; results are always handed back as ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_ZERO = _Q(0)
_ONE = _Q(1)


class InfeasibleLP(Exception):
    pass


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class DualSimplex:
    """Dense tableau over structural columns ``0..nvar-1`` plus one slack per row.

    Slack of row ``i`` is variable ``nvar + i``. Rows are only ever added,
    never removed, so row indices are stable handles.
    """

    def __init__(self, costs: Sequence):
        if any(c < 0 for c in costs):
            raise ValueError("dual simplex start needs non-negative costs")
        self.nvar = len(costs)
        self.costs = [_Q(c) for c in costs]
        self.d = list(self.costs)  # reduced costs, one per column
        self.rows: list[list] = []
        self.rhs: list = []
        self.basis: list[int] = []
        self.where = {}  # basic variable -> row position
        self.pivots = 0

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def add_row(self, coeffs: dict[int, object], bound) -> int:
        """Append ``sum coeffs[j] x_j >= bound`` and return its row index."""
        width = self.nvar + self.nrows + 1
        for row in self.rows:
            row.append(_ZERO)
        self.d.append(_ZERO)
        new = [_ZERO] * width
        rhs = -_Q(bound)
        for j, a in coeffs.items():
            new[j] -= _Q(a)
        # re-express basic structural variables through the current tableau
        for j, a in coeffs.items():
            r = self.where.get(j)
            if r is None:
                continue
            a = _Q(a)
            row = self.rows[r]
            for k, v in enumerate(row):
                if v:
                    new[k] += a * v
            rhs += a * self.rhs[r]
        slack = self.nvar + self.nrows
        new[slack] = _ONE
        self.rows.append(new)
        self.rhs.append(rhs)
        self.basis.append(slack)
        self.where[slack] = len(self.rows) - 1
        return len(self.rows) - 1

    def _pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        p = row[j]
        if p != _ONE:
            inv = _ONE / p
            for k, v in enumerate(row):
                if v:
                    row[k] = v * inv
            self.rhs[r] *= inv
        nz = [k for k, v in enumerate(row) if v]
        rr = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[j]
            if not f:
                continue
            for k in nz:
                other[k] -= f * row[k]
            self.rhs[i] -= f * rr
        f = self.d[j]
        if f:
            for k in nz:
                self.d[k] -= f * row[k]
        old = self.basis[r]
        del self.where[old]
        self.basis[r] = j
        self.where[j] = r
        self.pivots += 1

    def reoptimize(self, max_pivots: int = 1_000_000) -> None:
        """Pivot until primal feasible (Bland's rule on the dual, so it terminates)."""
        for _ in range(max_pivots):
            leave = None
            for i, b in enumerate(self.rhs):
                if b < 0 and (leave is None or self.basis[i] < self.basis[leave]):
                    leave = i
            if leave is None:
                return
            row = self.rows[leave]
            best = None
            best_ratio = None
            for k, a in enumerate(row):
                if a < 0:
                    ratio = self.d[k] / -a
                    if best is None or ratio < best_ratio:
                        best, best_ratio = k, ratio
            if best is None:
                raise InfeasibleLP(f"row {leave} cannot be satisfied")
            self._pivot(leave, best)
        raise RuntimeError("pivot limit reached")

    def solution(self) -> list[Fraction]:
        x = [Fraction(0)] * self.nvar
        for i, b in enumerate(self.basis):
            if b < self.nvar:
                x[b] = _frac(self.rhs[i])
        return x

    def objective(self) -> Fraction:
        return sum((_frac(c) * v for c, v in zip(self.costs, self.solution())), Fraction(0))

    def nonbasic(self) -> list[int]:
        basic = set(self.basis)
        return [k for k in range(self.nvar + self.nrows) if k not in basic]


def solve_covering_lp(costs: Sequence, rows: Sequence[tuple[dict[int, object], object]],
                      upper: Sequence | None = None) -> tuple[Fraction, list[Fraction]]:
    """One-shot ``min c.x, rows >= bound, 0 <= x <= upper``; returns (objective, x)."""
    lp = DualSimplex(costs)
    for coeffs, bound in rows:
        lp.add_row(coeffs, bound)
    if upper is not None:
        for j, u in enumerate(upper):
            lp.add_row({j: -1}, -_Q(u))
    lp.reoptimize()
    return lp.objective(), lp.solution()


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank by fraction-valued Gaussian elimination."""
    rows = [[Fraction(v) for v in r] for r in matrix]
    if not rows:
        return 0
    ncol = len(rows[0])
    rk = 0
    for c in range(ncol):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][c]
        for i in range(len(rows)):
            if i != rk and rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rk
