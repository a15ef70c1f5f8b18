"""Positive tropical Plücker vectors and the subdivisions they induce.

A height vector lifts the hypersimplex vertices; projecting the lower hull
of the lift gives a regular subdivision.  Heights satisfying the positive
three-term tropical exchange produce subdivisions all of whose faces are
positroid polytopes, and the finest ones are exactly the moment-map
tilings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from random import Random

from .cells import positroid_catalog
from .exact import RatMatrix, rank
from .grassmann import Matroid
from .hypersimplex import enumerate_D, eulerian, simplex_in_positroid
from .util import rat_from_str, rat_to_str, subset_from_key, subset_key, subsets

Subset = tuple[int, ...]

__all__ = [
    "HeightVector",
    "is_positive_tropical",
    "positivity_violation",
    "Subdivision",
    "SubdivisionCell",
    "regular_subdivision",
    "argmin_face",
    "faces_are_positroids",
    "is_finest",
    "octahedra_all_subdivided",
    "walls",
    "interior_face_count",
    "random_positive_tropical",
]


@dataclass(frozen=True)
class HeightVector:
    """Rational height per k-subset of [n]."""

    k: int
    n: int
    heights: tuple[Fraction, ...]  # aligned with subsets(n, k) in lex order

    @classmethod
    def make(cls, k: int, n: int, table) -> "HeightVector":
        order = subsets(n, k)
        if isinstance(table, dict):
            vals = [Fraction(table.get(I, table.get(subset_key(I), 0))) for I in order]
        else:
            vals = [Fraction(x) for x in table]
            if len(vals) != len(order):
                raise ValueError(f"expected {len(order)} heights")
        return cls(k, n, tuple(vals))

    def height(self, I) -> Fraction:
        order = subsets(self.n, self.k)
        return self.heights[order.index(tuple(sorted(I)))]

    def table(self) -> dict[Subset, Fraction]:
        return dict(zip(subsets(self.n, self.k), self.heights))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "heights": {subset_key(I): rat_to_str(v)
                        for I, v in self.table().items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "HeightVector":
        table = {subset_from_key(key): rat_from_str(v)
                 for key, v in data["heights"].items()}
        return cls.make(data["k"], data["n"], table)


def positivity_violation(P: HeightVector):
    """First (S; a, b, c, d) where the positive exchange fails, else None.

    The requirement: P_Sac + P_Sbd equals min(P_Sab + P_Scd, P_Sad + P_Sbc).
    """
    tab = P.table()
    if P.k < 2:
        return None
    for S in subsets(P.n, P.k - 2):
        rest = [x for x in range(1, P.n + 1) if x not in S]
        for a, b, c, d in combinations(rest, 4):
            mid = tab[tuple(sorted(S + (a, c)))] + tab[tuple(sorted(S + (b, d)))]
            lo = min(tab[tuple(sorted(S + (a, b)))] + tab[tuple(sorted(S + (c, d)))],
                     tab[tuple(sorted(S + (a, d)))] + tab[tuple(sorted(S + (b, c)))])
            if mid != lo:
                return (S, a, b, c, d)
    return None


def is_positive_tropical(P: HeightVector) -> bool:
    return positivity_violation(P) is None


@dataclass(frozen=True)
class SubdivisionCell:
    vertices: frozenset[Subset]
    witness: tuple[Fraction, ...]

    def sorted_vertices(self) -> list[Subset]:
        return sorted(self.vertices)

    def matroid(self, k: int, n: int) -> Matroid:
        return Matroid(n, k, frozenset(frozenset(I) for I in self.vertices))


@dataclass(frozen=True)
class Subdivision:
    k: int
    n: int
    cells: tuple[SubdivisionCell, ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "cells": [{
                "vertices": [subset_key(I) for I in c.sorted_vertices()],
                "witness": [rat_to_str(x) for x in c.witness],
            } for c in self.cells],
        }


def _aff_rank_sets(n: int, sets: list[Subset]) -> int:
    if len(sets) <= 1:
        return 0
    base = set(sets[0])
    rows = []
    for I in sets[1:]:
        s = set(I)
        rows.append([Fraction(int(i in s) - int(i in base)) for i in range(1, n + 1)])
    return rank(RatMatrix.from_rows(rows))


def argmin_face(P: HeightVector, y) -> frozenset[Subset]:
    """Face of the subdivision selected by tilt y: argmin of P_I - y . e_I."""
    y = [Fraction(t) for t in y]
    best = None
    face: list[Subset] = []
    for I, h in P.table().items():
        g = h - sum(y[i - 1] for i in I)
        if best is None or g < best:
            best, face = g, [I]
        elif g == best:
            face.append(I)
    return frozenset(face)


def _grow_to_cell(P: HeightVector, directions) -> tuple[frozenset[Subset], list[Fraction]]:
    """From the flat tilt, ray-shoot along candidate directions until the
    argmin face is full-dimensional; returns (cell, witness)."""
    n, k = P.n, P.k
    full = n - 1 if 0 < k < n else 0
    y = [Fraction(0)] * n
    face = argmin_face(P, y)
    tab = P.table()
    while _aff_rank_sets(n, sorted(face)) < full:
        progressed = False
        for u in directions:
            beta = {sum(u[i - 1] for i in I) for I in face}
            if len(beta) != 1:
                continue
            b = beta.pop()
            g0 = min(tab[I] - sum(y[i - 1] for i in I) for I in face)
            best_t = None
            for J, h in tab.items():
                if J in face:
                    continue
                uj = sum(u[i - 1] for i in J)
                if uj <= b:
                    continue
                t = (h - sum(y[i - 1] for i in J) - g0) / (uj - b)
                if best_t is None or t < best_t:
                    best_t = t
            if best_t is None:
                continue
            y2 = [yi + best_t * ui for yi, ui in zip(y, u)]
            face2 = argmin_face(P, y2)
            if not face <= face2 or face2 == face:
                continue
            y, face = y2, face2
            progressed = True
            break
        if not progressed:
            raise RuntimeError("could not grow a full-dimensional cell with "
                               "0/1 tilts; heights are not matroidal")
    return frozenset(face), y


def _zero_one_directions(n: int):
    out = []
    for size in range(1, n):
        for S in combinations(range(1, n + 1), size):
            u = [Fraction(int(i in S)) for i in range(1, n + 1)]
            out.append(u)
            out.append([-x for x in u])
    return out


def _neighbor_across(P: HeightVector, cell: frozenset[Subset],
                     y: list[Fraction], u) -> tuple[frozenset[Subset], list[Fraction]] | None:
    """Ray-shoot the witness across the wall of ``cell`` in direction u."""
    tab = P.table()
    vals = {I: sum(u[i - 1] for i in I) for I in cell}
    beta = max(vals.values())
    wall = [I for I in cell if vals[I] == beta]
    if len(wall) == len(cell):
        return None
    g0 = min(tab[I] - sum(y[i - 1] for i in I) for I in cell)
    best_t, achievers = None, []
    for J, h in tab.items():
        if J in cell:
            continue
        uj = sum(u[i - 1] for i in J)
        if uj <= beta:
            continue
        gap = h - sum(y[i - 1] for i in J) - g0
        t = gap / (uj - beta)
        if best_t is None or t < best_t:
            best_t, achievers = t, [J]
        elif t == best_t:
            achievers.append(J)
    if best_t is None:
        return None
    y2 = [yi + best_t * ui for yi, ui in zip(y, u)]
    face2 = argmin_face(P, y2)
    if _aff_rank_sets(P.n, sorted(face2)) == P.n - 1:
        return face2, y2
    return None


def _cells_by_wall_search(P: HeightVector) -> list[SubdivisionCell]:
    n = P.n
    directions = _zero_one_directions(n)
    start, y0 = _grow_to_cell(P, directions)
    cells = {start: y0}
    queue = [start]
    while queue:
        cell = queue.pop()
        y = cells[cell]
        for u in directions:
            res = _neighbor_across(P, cell, y, u)
            if res is None:
                continue
            nb, y2 = res
            if nb not in cells:
                cells[nb] = y2
                queue.append(nb)
    return [SubdivisionCell(c, tuple(cells[c])) for c in sorted(cells, key=sorted)]


def _cells_by_span_scan(P: HeightVector) -> list[SubdivisionCell]:
    """Complete lower-hull scan over candidate facet hyperplanes.

    Every facet hyperplane is spanned by n affinely independent lifted
    points, so scanning n-subsets finds them all; exponential in n but
    exact, and only used when the heights are not positive tropical.
    """
    n = P.n
    pts = [(I, h) for I, h in P.table().items()]
    if len(pts) == 1:
        return [SubdivisionCell(frozenset([pts[0][0]]), tuple([Fraction(0)] * n))]
    found: dict[frozenset, tuple[Fraction, ...]] = {}
    for combo in combinations(range(len(pts)), min(n, len(pts))):
        base_I, base_h = pts[combo[0]]
        rows = []
        for idx in combo[1:]:
            I, h = pts[idx]
            rows.append([Fraction(int(i in I) - int(i in base_I))
                         for i in range(1, n + 1)] + [h - base_h])
        from .exact import kernel_basis

        K = kernel_basis(RatMatrix.from_rows(rows))
        normal = None
        for r in range(K.rows):
            cand = list(K.row(r))
            if cand[-1] != 0:
                normal = cand
                break
        if normal is None:
            continue
        a, b = normal[:-1], normal[-1]
        if b < 0:
            a, b = [-x for x in a], -b
        # phi(I) = a . e_I + b P_I, constant = c on the candidate plane
        c = sum(a[i - 1] for i in base_I) + b * base_h
        tight, ok = [], True
        for I, h in pts:
            val = sum(a[i - 1] for i in I) + b * h
            if val == c:
                tight.append(I)
            elif val < c:
                ok = False
                break
        if not ok:
            continue
        if _aff_rank_sets(n, tight) != (n - 1 if 0 < P.k < n else 0):
            continue
        witness = tuple(-Fraction(x, b) for x in a)
        found.setdefault(frozenset(tight), witness)
    return [SubdivisionCell(c, found[c]) for c in sorted(found, key=sorted)]


def regular_subdivision(P: HeightVector) -> Subdivision:
    """All full-dimensional cells of the regular subdivision, each with an
    exact witness tilt whose argmin reproduces the cell.

    Positive tropical heights use an exact wall-crossing search (walls of
    matroidal subdivisions have 0/1 normals) audited against the staircase
    count; anything else falls back to a complete hyperplane scan.
    """
    n, k = P.n, P.k
    if k == 0 or k == n:
        only = subsets(n, k)[0]
        return Subdivision(k, n, (SubdivisionCell(frozenset([only]),
                                                  tuple([Fraction(0)] * n)),))
    if is_positive_tropical(P):
        try:
            cells = _cells_by_wall_search(P)
            total = 0
            for cell in cells:
                M = cell.matroid(k, n)
                total += sum(1 for ws in enumerate_D(k, n)
                             if simplex_in_positroid(ws, M))
            if total != eulerian(k - 1, n - 1):
                cells = _cells_by_span_scan(P)
        except RuntimeError:
            cells = _cells_by_span_scan(P)
    else:
        cells = _cells_by_span_scan(P)
    for cell in cells:
        if argmin_face(P, cell.witness) != cell.vertices:
            raise RuntimeError("witness does not certify its cell")
    return Subdivision(k, n, tuple(cells))


def faces_are_positroids(D: Subdivision) -> bool:
    """Every full-dimensional cell must be a positroid polytope."""
    catalog = positroid_catalog(D.k, D.n)
    for cell in D.cells:
        bases = frozenset(frozenset(I) for I in cell.vertices)
        if bases not in catalog:
            return False
    return True


def octahedra_all_subdivided(D: Subdivision) -> bool:
    """No cell may contain all six vertices of a 3-dimensional octahedral
    face {Sab, Sac, Sad, Sbc, Sbd, Scd}."""
    k, n = D.k, D.n
    if k < 2 or n - k < 2:
        return True
    for S in subsets(n, k - 2):
        rest = [x for x in range(1, n + 1) if x not in S]
        for quad in combinations(rest, 4):
            octa = {tuple(sorted(S + pair)) for pair in combinations(quad, 2)}
            for cell in D.cells:
                if octa <= cell.vertices:
                    return False
    return True


def is_finest(D: Subdivision) -> bool:
    """Finest positroid subdivision test by cell count, cross-checked on
    octahedral faces when those exist."""
    expected = 1
    from math import comb

    expected = comb(D.n - 2, D.k - 1)
    by_count = len(D.cells) == expected
    if D.k >= 2 and D.n - D.k >= 2:
        octa = octahedra_all_subdivided(D)
        if octa != by_count:
            raise RuntimeError("finest-subdivision criteria disagree; "
                               "subdivision is not positroidal")
    return by_count


def walls(D: Subdivision) -> list[frozenset[Subset]]:
    """Shared codimension-one faces between pairs of cells."""
    out = set()
    for i in range(len(D.cells)):
        for j in range(i + 1, len(D.cells)):
            shared = D.cells[i].vertices & D.cells[j].vertices
            if shared and _aff_rank_sets(D.n, sorted(shared)) == D.n - 2:
                out.add(frozenset(shared))
    return sorted(out, key=sorted)


def interior_face_count(D: Subdivision, c: int) -> int:
    """Interior faces of dimension n - c, implemented for c = 1, 2."""
    if c == 1:
        return len(D.cells)
    if c == 2:
        return len(walls(D))
    raise NotImplementedError("only codimensions 1 and 2 are tabulated")


def tropical_minor(A: list[list[Fraction]], cols: Subset) -> Fraction:
    """Min-plus permanent of the chosen columns."""
    k = len(A)
    best = None
    for sigma in permutations(range(k)):
        s = sum(A[r][cols[sigma[r]] - 1] for r in range(k))
        if best is None or s < best:
            best = s
    return best


def random_positive_tropical(k: int, n: int, rng: Random,
                             hi: int = 40) -> HeightVector:
    """Min-plus minors of a random rational matrix; rejection-sampled
    against the positivity check, which in practice never rejects."""
    for _ in range(50):
        A = [[Fraction(rng.randint(0, hi)) for _ in range(n)] for _ in range(k)]
        P = HeightVector.make(k, n, {I: tropical_minor(A, I) for I in subsets(n, k)})
        if is_positive_tropical(P):
            return P
    raise RuntimeError("could not sample a positive tropical height vector")
