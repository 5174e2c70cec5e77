"""Exact simplex over ``Fraction``.

Only what the geometry code needs: feasibility of ``A x = b, x >= 0`` and
maximisation of a linear objective over that set.  Bland's rule keeps it
from cycling; problem sizes are tiny (a few dozen columns at most).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list[Fraction] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    for r in range(len(tab)):
        if r != row and tab[r][col] != 0:
            f = tab[r][col]
            tab[r] = [a - f * b for a, b in zip(tab[r], tab[row])]
    basis[row] = col


def _run(tab, basis, ncols, allowed):
    """Maximise the objective stored in the last row (as reduced costs)."""
    obj = len(tab) - 1
    while True:
        col = next((c for c in range(ncols) if allowed[c] and tab[obj][c] < 0), None)
        if col is None:
            return "optimal"
        best = None
        for r in range(obj):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            return "unbounded"
        _pivot(tab, basis, best[1], col)


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None) -> LPResult:
    """Maximise c.x subject to A x = b, x >= 0 (c=None: feasibility only)."""
    m = len(A)
    n = len(A[0]) if m else (len(c) if c is not None else 0)
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append((row, rhs))
    # phase 1 with one artificial per row
    ncols = n + m
    tab = []
    for i, (row, rhs) in enumerate(rows):
        tab.append(row + [Fraction(int(i == k)) for k in range(m)] + [rhs])
    obj = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        for k in range(ncols + 1):
            if k < n or k == ncols:
                obj[k] -= tab[i][k]
    tab.append(obj)
    basis = list(range(n, n + m))
    _run(tab, basis, ncols, [True] * ncols)
    if tab[-1][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n:
            col = next((k for k in range(n) if tab[r][k] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)
    if c is None:
        x = [Fraction(0)] * n
        for r, bv in enumerate(basis):
            if bv < n:
                x[bv] = tab[r][-1]
        return LPResult("optimal", x, Fraction(0))
    # phase 2: reduced costs for maximising c.x
    cvec = [Fraction(v) for v in c]
    obj = [-v for v in cvec] + [Fraction(0)] * m + [Fraction(0)]
    for r, bv in enumerate(basis):
        if bv < n and obj[bv] != 0:
            f = obj[bv]
            obj = [a - f * bb for a, bb in zip(obj, tab[r])]
    tab[-1] = obj
    status = _run(tab, basis, ncols, [k < n for k in range(ncols)])
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for r, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[r][-1]
    return LPResult("optimal", x, sum(a * v for a, v in zip(cvec, x)))


def in_cone_hull(point: Sequence, points: Sequence[Sequence], rays: Sequence[Sequence] = ()) -> list[Fraction] | None:
    """Coefficients (t over points, s over rays) writing point in conv+cone, else None."""
    dim = len(point)
    cols = [list(p) + [1] for p in points] + [list(r) + [0] for r in rays]
    if not cols:
        return None
    A = [[col[k] for col in cols] for k in range(dim + 1)]
    rhs = list(point) + [1]
    res = solve_lp(A, rhs)
    return res.x if res.status != "infeasible" else None
