"""Moment map, positroid polytopes, w-simplices, and hypersimplex tilings.

The hypersimplex here is the moment-map image of rank k+1 points, so tile
catalogs are generated from bicolored triangulations with k black
triangles via their dual trees.  Tilings are verified and enumerated
purely combinatorially: each w-simplex of the staircase triangulation
must land in exactly one tile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .cells import positroid_of_perm
from .grassmann import Matroid, PluckerVector
from .perms import DecoratedPermutation
from .plabic import dual_graph_of_triangulation, positroid_of_graph, trip_permutation
from .triangulations import (
    BicoloredSubdivision,
    BicoloredTriangulation,
    area,
    class_representative,
    enumerate_subdivisions,
)
from .util import rat_to_str

__all__ = [
    "moment_map",
    "polytope_vertices",
    "cyclic_left_descents",
    "WSimplex",
    "w_simplex",
    "enumerate_D",
    "simplex_in_positroid",
    "TileRecord",
    "tile_catalog",
    "verify_tiling",
    "Tiling",
    "enumerate_tilings",
    "tile_inequalities_hypersimplex",
    "point_satisfies_inequalities",
    "eulerian",
    "narayana",
    "plane_partitions",
    "binomial",
]


def moment_map(P: PluckerVector) -> tuple[Fraction, ...]:
    """Sum of squared coordinates times indicator vectors, normalised."""
    total = sum(v * v for v in P.coords.values())
    out = [Fraction(0)] * P.n
    for I, v in P.coords.items():
        if v == 0:
            continue
        w = v * v
        for i in I:
            out[i - 1] += w
    return tuple(x / total for x in out)


def polytope_vertices(M: Matroid) -> frozenset[tuple[int, ...]]:
    """Indicator vectors of the bases, as 0/1 tuples."""
    out = set()
    for B in M.bases:
        out.add(tuple(1 if i in B else 0 for i in range(1, M.n + 1)))
    return frozenset(out)


def cyclic_left_descents(w: tuple[int, ...]) -> frozenset[int]:
    """{i >= 2 : i sits left of i-1} plus 1 when 1 sits left of n."""
    n = len(w)
    pos = {v: i for i, v in enumerate(w)}
    out = {i for i in range(2, n + 1) if pos[i] < pos[i - 1]}
    if pos[1] < pos[n]:
        out.add(1)
    return frozenset(out)


@dataclass(frozen=True)
class WSimplex:
    """Simplex of the staircase triangulation attached to w with w_n = n.

    ``I[r]`` is the cyclic left descent set of the rotation of w ending at
    r (indices 1..n; the rotation ending at n is w itself)."""

    w: tuple[int, ...]
    I: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.w)

    def vertex(self, r: int) -> frozenset[int]:
        return self.I[r - 1]

    def vertices(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        return tuple(tuple(1 if i in Ir else 0 for i in range(1, n + 1))
                     for Ir in self.I)

    def __repr__(self):
        return f"WSimplex({''.join(map(str, self.w))})"


def _rotation_ending_at(w: tuple[int, ...], a: int) -> tuple[int, ...]:
    pos = w.index(a)
    return w[pos + 1:] + w[:pos + 1]


def w_simplex(w) -> WSimplex:
    w = tuple(w)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)) or w[-1] != n:
        raise ValueError("w must be a permutation ending in n")
    I = []
    for r in range(1, n + 1):
        target = n if r == 1 else r - 1
        I.append(cyclic_left_descents(_rotation_ending_at(w, target)))
    return WSimplex(w, tuple(I))


@lru_cache(maxsize=None)
def enumerate_D(k_plus_1: int, n: int) -> tuple[WSimplex, ...]:
    """All w with w_n = n and k+1 cyclic left descents, with their simplices."""
    if not (1 <= k_plus_1 <= n - 1):
        raise ValueError("need 1 <= k+1 <= n-1")
    out = []
    for head in permutations(range(1, n)):
        w = head + (n,)
        if len(cyclic_left_descents(w)) == k_plus_1:
            out.append(w_simplex(w))
    return tuple(sorted(out, key=lambda s: s.w))


def simplex_in_positroid(ws: WSimplex, M: Matroid) -> bool:
    """Vertex containment: every descent set must be a basis."""
    if ws.n != M.n:
        raise ValueError("sizes do not match")
    return all(Ir in M.bases for Ir in ws.I)


@dataclass(frozen=True)
class TileRecord:
    """A moment-map tile: dual-tree positroid of a bicolored subdivision."""

    perm: DecoratedPermutation
    matroid: Matroid
    subdivision: BicoloredSubdivision
    triangulation: BicoloredTriangulation

    def to_json(self) -> dict:
        return {
            "perm": self.perm.to_json(),
            "bases": [list(b) for b in self.matroid.sorted_bases()],
            "black_polygons": sorted(list(p) for p in self.subdivision.black_polygons),
        }


@lru_cache(maxsize=None)
def tile_catalog(k_plus_1: int, n: int) -> dict[DecoratedPermutation, TileRecord]:
    """Positroid tiles of the rank-(k+1) hypersimplex on [n], keyed by the
    trip permutation of the dual tree; one entry per bicolored subdivision
    of type (k, n)."""
    k = k_plus_1 - 1
    out: dict[DecoratedPermutation, TileRecord] = {}
    for S in enumerate_subdivisions(n, k):
        T = class_representative(S)
        G = dual_graph_of_triangulation(T)
        pi = trip_permutation(G)
        M = positroid_of_graph(G)
        if pi in out:
            raise RuntimeError(f"two subdivisions share the tile label {pi}")
        out[pi] = TileRecord(pi, M, S, T)
    return out


@dataclass
class TilingReport:
    valid: bool
    k_plus_1: int
    n: int
    tiles: list[DecoratedPermutation]
    violations: list[str]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "k_plus_1": self.k_plus_1,
            "n": self.n,
            "tiles": [repr(p) for p in self.tiles],
            "violations": self.violations,
        }


def _resolve_tiles(tiles, k_plus_1: int, n: int):
    """Tiles may be decorated permutations, triangulations, or matroids."""
    catalog = tile_catalog(k_plus_1, n)
    by_bases = {frozenset(rec.matroid.bases): rec for rec in catalog.values()}
    resolved = []
    for t in tiles:
        if isinstance(t, TileRecord):
            resolved.append((t.perm, t.matroid, True))
        elif isinstance(t, DecoratedPermutation):
            if t in catalog:
                resolved.append((t, catalog[t].matroid, True))
            else:
                M = positroid_of_perm(t)
                resolved.append((t, M, frozenset(M.bases) in by_bases))
        elif isinstance(t, BicoloredTriangulation):
            G = dual_graph_of_triangulation(t)
            pi = trip_permutation(G)
            resolved.append((pi, positroid_of_graph(G), pi in catalog))
        elif isinstance(t, Matroid):
            rec = by_bases.get(frozenset(t.bases))
            pi = rec.perm if rec else None
            resolved.append((pi, t, rec is not None))
        else:
            raise TypeError(f"cannot interpret tile {t!r}")
    return resolved


def verify_tiling(tiles, k_plus_1: int, n: int) -> TilingReport:
    """Exactly-once coverage of every w-simplex plus tile-catalog membership."""
    resolved = _resolve_tiles(tiles, k_plus_1, n)
    violations = []
    perms = [p for p, _, _ in resolved]
    if len(set(perms)) != len(perms):
        violations.append("repeated tiles")
    for p, M, in_catalog in resolved:
        if M.n != n or M.k != k_plus_1:
            violations.append(f"tile {p} has wrong type ({M.k},{M.n})")
        if not in_catalog:
            violations.append(f"tile {p} is not a moment-map tile")
    for ws in enumerate_D(k_plus_1, n):
        hits = [p for p, M, _ in resolved if simplex_in_positroid(ws, M)]
        if len(hits) == 0:
            violations.append(f"simplex of w={''.join(map(str, ws.w))} uncovered")
        elif len(hits) > 1:
            violations.append(
                f"simplex of w={''.join(map(str, ws.w))} covered by "
                + ", ".join(repr(h) for h in hits))
    return TilingReport(not violations, k_plus_1, n, perms, violations)


@dataclass(frozen=True)
class Tiling:
    k_plus_1: int
    n: int
    tiles: tuple[TileRecord, ...]

    def perms(self) -> tuple[DecoratedPermutation, ...]:
        return tuple(t.perm for t in self.tiles)

    def to_json(self) -> dict:
        return {
            "space": "hypersimplex",
            "k_plus_1": self.k_plus_1,
            "n": self.n,
            "tiles": [t.to_json() for t in self.tiles],
        }


@lru_cache(maxsize=None)
def enumerate_tilings(k_plus_1: int, n: int) -> tuple[Tiling, ...]:
    """Exact-cover search: pick tiles from the catalog so every w-simplex
    lies in exactly one; deterministic backtracking in catalog order."""
    catalog = tile_catalog(k_plus_1, n)
    recs = [catalog[p] for p in sorted(catalog, key=repr)]
    simplices = enumerate_D(k_plus_1, n)
    covers = []
    for rec in recs:
        covers.append(frozenset(idx for idx, ws in enumerate(simplices)
                                if simplex_in_positroid(ws, rec.matroid)))
    universe = frozenset(range(len(simplices)))
    solutions: list[tuple[int, ...]] = []

    def search(uncovered: frozenset[int], chosen: list[int]):
        if not uncovered:
            solutions.append(tuple(chosen))
            return
        target = min(uncovered)
        for idx in range(len(recs)):
            cov = covers[idx]
            if target not in cov or not cov <= uncovered:
                continue
            chosen.append(idx)
            search(uncovered - cov, chosen)
            chosen.pop()

    search(universe, [])
    seen = set()
    out = []
    for sol in solutions:
        key = tuple(sorted(sol))
        if key in seen:
            continue
        seen.add(key)
        out.append(Tiling(k_plus_1, n, tuple(recs[i] for i in key)))
    out.sort(key=lambda t: tuple(repr(p) for p in t.perms()))
    return tuple(out)


def tile_inequalities_hypersimplex(T: BicoloredTriangulation):
    """Per arc h -> j of T: bounds area <= x_h + ... + x_{j-1} <= area + 1."""
    out = []
    for h, j in sorted(T.arcs()):
        a = area(T, h, j)
        out.append(((h, j), a, a + 1))
    return out


def point_satisfies_inequalities(point, ineqs, strict: bool = False) -> bool:
    for (h, j), lo, hi in ineqs:
        s = sum(Fraction(point[i - 1]) for i in range(h, j))
        if strict:
            if not (lo < s < hi):
                return False
        elif not (lo <= s <= hi):
            return False
    return True


# -- counting formulas ---------------------------------------------------------


def binomial(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def eulerian(k: int, m: int) -> int:
    """E_{k,m} = sum over l of (-1)^l C(m+1, l) (k+1-l)^m."""
    n = m + 1
    return sum((-1) ** l * binomial(n, l) * (k + 1 - l) ** m
               for l in range(0, k + 2))


def narayana(a: int, b: int) -> int:
    """N_{a,b} = C(a,b) C(a,b-1) / a."""
    if a <= 0:
        return 1 if b in (0, 1) else 0
    num = Fraction(binomial(a, b) * binomial(a, b - 1), a)
    assert num.denominator == 1
    return int(num)


def plane_partitions(a: int, b: int, c: int) -> int:
    """Number of plane partitions in an a x b x c box (box product formula)."""
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    assert out.denominator == 1
    return int(out)


def moment_map_json(point) -> list[str]:
    return [rat_to_str(x) for x in point]
