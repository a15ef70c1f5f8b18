"""Bicolored triangulations and subdivisions of a convex n-gon.

Vertices are labelled 1..n clockwise.  A type (k, n) triangulation has k
black triangles; erasing diagonals between like-coloured neighbours gives
the bicolored subdivision that represents its equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Triangle = tuple[int, int, int]
Arc = tuple[int, int]

__all__ = [
    "BicoloredTriangulation",
    "BicoloredSubdivision",
    "all_triangulations",
    "enumerate_bicolored",
    "enumerate_subdivisions",
    "equivalence_class",
    "class_representative",
    "flip",
    "flippable_arcs",
    "area",
    "arcs_of",
    "arcs_cross",
    "fan_triangulation",
]


def _norm_tri(t) -> Triangle:
    a, b, c = sorted(t)
    if len({a, b, c}) != 3:
        raise ValueError(f"degenerate triangle {t}")
    return (a, b, c)


@dataclass(frozen=True)
class BicoloredTriangulation:
    n: int
    black: frozenset[Triangle]
    white: frozenset[Triangle]

    def __post_init__(self):
        tris = self.black | self.white
        if self.black & self.white:
            raise ValueError("a triangle cannot be both colours")
        if self.n < 3:
            raise ValueError("need n >= 3")
        if len(tris) != self.n - 2:
            raise ValueError(f"a triangulated {self.n}-gon has {self.n - 2} triangles")
        arcs = arcs_of_triangles(tris)
        for x, y in arcs:
            if not (1 <= x < y <= self.n):
                raise ValueError(f"arc {(x, y)} outside the {self.n}-gon")
        for a in arcs:
            for b in arcs:
                if arcs_cross(a, b):
                    raise ValueError(f"arcs {a} and {b} cross")
        # every polygon side must bound exactly one triangle
        for i in range(1, self.n + 1):
            side = _norm_arc(i, i % self.n + 1)
            if sum(1 for t in tris if _has_arc(t, side)) != 1:
                raise ValueError(f"side {side} not covered exactly once")

    @classmethod
    def make(cls, n: int, black=(), white=()) -> "BicoloredTriangulation":
        return cls(n, frozenset(_norm_tri(t) for t in black),
                   frozenset(_norm_tri(t) for t in white))

    @property
    def k(self) -> int:
        return len(self.black)

    @property
    def triangles(self) -> frozenset[Triangle]:
        return self.black | self.white

    def colour(self, tri: Triangle) -> str:
        tri = _norm_tri(tri)
        if tri in self.black:
            return "black"
        if tri in self.white:
            return "white"
        raise KeyError(tri)

    def arcs(self) -> frozenset[Arc]:
        return arcs_of_triangles(self.triangles)

    def diagonals(self) -> frozenset[Arc]:
        return frozenset(a for a in self.arcs() if not self.is_side(a))

    def is_side(self, arc: Arc) -> bool:
        x, y = arc
        return y == x + 1 or (x == 1 and y == self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "black": sorted(sorted(t) for t in self.black),
            "white": sorted(sorted(t) for t in self.white),
        }

    @classmethod
    def from_json(cls, data: dict) -> "BicoloredTriangulation":
        return cls.make(data["n"], data.get("black", ()), data.get("white", ()))

    def __repr__(self):
        b = ",".join("".join(map(str, t)) if self.n < 10 else str(t)
                     for t in sorted(self.black))
        return f"BicoloredTriangulation(n={self.n}, black=[{b}])"


@dataclass(frozen=True)
class BicoloredSubdivision:
    """Black/white polygons of the n-gon; the class invariant of a triangulation."""

    n: int
    black_polygons: frozenset[tuple[int, ...]]
    white_polygons: frozenset[tuple[int, ...]]

    @property
    def k(self) -> int:
        return sum(len(p) - 2 for p in self.black_polygons)

    def key(self) -> tuple:
        return (self.n, tuple(sorted(self.black_polygons)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "black_polygons": sorted(list(p) for p in self.black_polygons),
            "white_polygons": sorted(list(p) for p in self.white_polygons),
        }


def _norm_arc(x: int, y: int) -> Arc:
    return (x, y) if x < y else (y, x)


def _has_arc(tri: Triangle, arc: Arc) -> bool:
    return arc[0] in tri and arc[1] in tri


def arcs_of_triangles(tris) -> frozenset[Arc]:
    out = set()
    for a, b, c in tris:
        out |= {_norm_arc(a, b), _norm_arc(b, c), _norm_arc(a, c)}
    return frozenset(out)


def arcs_of(T: BicoloredTriangulation) -> list[Arc]:
    return sorted(T.arcs())


def arcs_cross(a: Arc, b: Arc) -> bool:
    """Strict crossing of chords of a convex polygon."""
    (p, q), (r, s) = a, b
    return (p < r < q < s) or (r < p < s < q)


@lru_cache(maxsize=None)
def _triangulations_of(cycle: tuple[int, ...]) -> tuple[frozenset[Triangle], ...]:
    if len(cycle) < 3:
        return (frozenset(),)
    if len(cycle) == 3:
        return (frozenset({_norm_tri(cycle)}),)
    first, last = cycle[0], cycle[-1]
    out = []
    for m in range(1, len(cycle) - 1):
        tri = _norm_tri((first, cycle[m], last))
        for left in _triangulations_of(cycle[: m + 1]):
            for right in _triangulations_of(cycle[m:]):
                out.append(left | right | {tri})
    return tuple(out)


def all_triangulations(n: int) -> list[frozenset[Triangle]]:
    """Every triangulation of the n-gon as a set of triangles (Catalan many)."""
    return list(_triangulations_of(tuple(range(1, n + 1))))


def enumerate_bicolored(n: int, k: int) -> list[BicoloredTriangulation]:
    """All type (k, n) bicolored triangulations."""
    from itertools import combinations

    out = []
    for tris in all_triangulations(n):
        tlist = sorted(tris)
        for blacks in combinations(tlist, k):
            black = frozenset(blacks)
            out.append(BicoloredTriangulation(n, black, tris - black))
    return out


def equivalence_class(T: BicoloredTriangulation) -> BicoloredSubdivision:
    """Merge like-coloured neighbours into the polygons of the subdivision."""
    tris = sorted(T.triangles)
    parent = {t: t for t in tris}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for i, t1 in enumerate(tris):
        for t2 in tris[i + 1:]:
            if len(set(t1) & set(t2)) == 2 and T.colour(t1) == T.colour(t2):
                parent[find(t1)] = find(t2)
    groups: dict[Triangle, set[int]] = {}
    colour_of: dict[Triangle, str] = {}
    for t in tris:
        r = find(t)
        groups.setdefault(r, set()).update(t)
        colour_of[r] = T.colour(t)
    black, white = set(), set()
    for r, verts in groups.items():
        poly = tuple(sorted(verts))
        (black if colour_of[r] == "black" else white).add(poly)
    return BicoloredSubdivision(T.n, frozenset(black), frozenset(white))


def fan_triangulation(poly: tuple[int, ...]) -> frozenset[Triangle]:
    """Fan a convex polygon (given by sorted vertex tuple) from its first vertex."""
    if len(poly) < 3:
        return frozenset()
    return frozenset(_norm_tri((poly[0], poly[i], poly[i + 1]))
                     for i in range(1, len(poly) - 1))


def class_representative(S: BicoloredSubdivision) -> BicoloredTriangulation:
    """Canonical triangulation of a subdivision: fan every polygon."""
    black, white = set(), set()
    for p in S.black_polygons:
        black |= fan_triangulation(p)
    for p in S.white_polygons:
        white |= fan_triangulation(p)
    return BicoloredTriangulation(S.n, frozenset(black), frozenset(white))


def enumerate_subdivisions(n: int, k: int) -> list[BicoloredSubdivision]:
    """Equivalence classes of type (k, n) triangulations, deterministically ordered."""
    seen: dict[tuple, BicoloredSubdivision] = {}
    for T in enumerate_bicolored(n, k):
        S = equivalence_class(T)
        seen.setdefault(S.key(), S)
    return [seen[key] for key in sorted(seen)]


def flippable_arcs(T: BicoloredTriangulation) -> list[Arc]:
    """Diagonals interior to one black polygon (both incident triangles black)."""
    out = []
    for arc in T.diagonals():
        touching = [t for t in T.triangles if _has_arc(t, arc)]
        if len(touching) == 2 and all(t in T.black for t in touching):
            out.append(arc)
    return sorted(out)


def flip(T: BicoloredTriangulation, arc: Arc) -> BicoloredTriangulation:
    """Exchange the diagonal of the black quadrilateral around ``arc``."""
    arc = _norm_arc(*arc)
    if arc not in flippable_arcs(T):
        raise ValueError(f"arc {arc} is not flippable (frozen, boundary, or white)")
    t1, t2 = (t for t in T.triangles if _has_arc(t, arc))
    others = (set(t1) | set(t2)) - set(arc)
    b, d = sorted(others)
    new1, new2 = _norm_tri((arc[0], b, d)), _norm_tri((arc[1], b, d))
    black = (T.black - {t1, t2}) | {new1, new2}
    return BicoloredTriangulation(T.n, frozenset(black), T.white)


def area(T: BicoloredTriangulation, h: int, j: int) -> int:
    """Black triangles of T on the side of arc h -> j cut off by {h..j}.

    The arc must be compatible with the subdivision class of T: either an
    arc of T or a chord crossing no region boundary.  The count only
    depends on the class.
    """
    h, j = _norm_arc(h, j)
    if not (1 <= h < j <= T.n):
        raise ValueError(f"arc ({h},{j}) outside the {T.n}-gon")
    S = equivalence_class(T)
    interval = set(range(h, j + 1))
    region_arcs = set()
    for poly in list(S.black_polygons) + list(S.white_polygons):
        ps = sorted(poly)
        for idx in range(len(ps)):
            region_arcs.add(_norm_arc(ps[idx], ps[(idx + 1) % len(ps)]))
    if any(arcs_cross((h, j), a) for a in region_arcs):
        raise ValueError(f"arc ({h},{j}) is incompatible with the subdivision of T")
    # a compatible chord meets at most one region's interior, so the piece of
    # each black polygon on the {h..j} side triangulates into |P & I| - 2 parts
    total = 0
    for poly in S.black_polygons:
        inside = len(set(poly) & interval)
        total += max(inside - 2, 0)
    return total
