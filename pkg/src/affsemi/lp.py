"""Exact rational linear feasibility by phase-one simplex (Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def nonneg_solution(A: Sequence[Sequence], b: Sequence, nvars: Optional[int] = None
                    ) -> Optional[list[Fraction]]:
    """Find ``x >= 0`` with ``A x == b`` over the rationals, or None.

    Dense tableau with one artificial variable per row; Bland's rule
    guarantees termination.
    """
    m = len(A)
    n = len(A[0]) if m else (nvars or 0)
    if m == 0:
        return [Fraction(0)] * n
    rows = []
    for i in range(m):
        r = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            r, rhs = [-x for x in r], -rhs
        rows.append(r + [Fraction(int(i == k)) for k in range(m)] + [rhs])
    width = n + m
    basis = list(range(n, n + m))
    # objective: minimise the sum of artificials; reduced costs kept in `cost`
    cost = [Fraction(0)] * (width + 1)
    for r in rows:
        for j in range(width + 1):
            cost[j] -= r[j]
    for k in range(n, width):
        cost[k] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen for a bounded phase-one problem
            break
        _pivot(rows, cost, leave, enter, width)
        basis[leave] = enter
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][width]
    return x


def _pivot(rows, cost, leave, enter, width):
    pr = rows[leave]
    inv = 1 / pr[enter]
    rows[leave] = pr = [x * inv for x in pr]
    for i, r in enumerate(rows):
        if i != leave and r[enter] != 0:
            f = r[enter]
            rows[i] = [x - f * y for x, y in zip(r, pr)]
    f = cost[enter]
    if f != 0:
        for j in range(width + 1):
            cost[j] -= f * pr[j]


def feasible_ge(A: Sequence[Sequence], b: Sequence, nvars: int) -> Optional[list[Fraction]]:
    """Find ``x >= 0`` with ``A x >= b`` (componentwise), or None."""
    m = len(A)
    slack = [[Fraction(x) for x in A[i]] + [Fraction(-int(i == k)) for k in range(m)]
             for i in range(m)]
    sol = nonneg_solution(slack, b, nvars + m)
    return None if sol is None else sol[:nvars]
