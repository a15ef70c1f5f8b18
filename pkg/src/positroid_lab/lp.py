"""Tiny exact linear-programming oracle over the rationals.

Only feasibility questions are needed: is a point a convex combination of
a finite vertex set.  Phase-one simplex with Bland's rule terminates and
never rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _simplex_phase1(A: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Feasibility of A x = b, x >= 0, by minimising artificial variables."""
    m, n = len(A), len(A[0]) if A else 0
    T = []
    for i in range(m):
        row = list(A[i])
        if b[i] < 0:
            row = [-x for x in row]
            bi = -b[i]
        else:
            bi = b[i]
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [bi])
    cost = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            cost[j] += T[i][j]
    for i in range(m):
        cost[n + i] = Fraction(0)
    basis = [n + i for i in range(m)]
    while True:
        enter = next((j for j in range(n + m) if cost[j] > 0), None)
        if enter is None:
            break
        ratios = [(T[i][-1] / T[i][enter], i) for i in range(m) if T[i][enter] > 0]
        if not ratios:
            break  # unbounded cannot happen in phase one; defensive
        best = min(ratios, key=lambda t: (t[0], basis[t[1]]))
        piv = best[1]
        pv = T[piv][enter]
        T[piv] = [x / pv for x in T[piv]]
        for i in range(m):
            if i != piv and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[piv])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, T[piv])]
        basis[piv] = enter
    total = sum(T[i][-1] for i in range(m) if basis[i] >= n)
    return total == 0


def point_in_hull(point: Sequence[Fraction], vertices: Sequence[Sequence[Fraction]]) -> bool:
    """Exact membership of ``point`` in the convex hull of ``vertices``."""
    if not vertices:
        return False
    dim = len(point)
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for d in range(dim):
        A.append([Fraction(v[d]) for v in vertices])
        b.append(Fraction(point[d]))
    A.append([Fraction(1)] * len(vertices))
    b.append(Fraction(1))
    return _simplex_phase1(A, b)
