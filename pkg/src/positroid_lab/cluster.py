"""Seeds and quiver mutation from bicolored triangulations.

Each black polygon of a triangulated n-gon contributes cluster variables:
one per arc of its triangulation apart from a distinguished boundary arc,
frozen on the remaining boundary arcs and mutable on internal diagonals.
Variables evaluate to signed twistor ratios; flipping a diagonal matches
seed mutation, which the tests check numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Mapping, Sequence

from .amplituhedron import ZMatrix, sample_tile_point, tile_membership_m2, twistor
from .plabic import hat_graph_of_triangulation, boundary_measurement
from .amplituhedron import amp_map
from .triangulations import (
    BicoloredTriangulation,
    arcs_cross,
    area,
    equivalence_class,
    flip,
    flippable_arcs,
)

Arc = tuple[int, int]

__all__ = [
    "ArcVariable",
    "ExchangeVariable",
    "Seed",
    "black_polygons",
    "default_distinguished",
    "build_seed",
    "eval_cluster_var",
    "mutate",
    "flip",
    "flippable_arcs",
    "noncrossing",
    "cluster_adjacency_check",
]


@dataclass(frozen=True)
class ArcVariable:
    """Signed twistor ratio attached to an arc of a black polygon."""

    arc: Arc
    arc_area: int
    dist_arc: Arc
    dist_area: int

    def evaluate(self, Y, Z: ZMatrix):
        num = Fraction(-1) ** self.arc_area * twistor(Y, Z, self.arc)
        den = Fraction(-1) ** self.dist_area * twistor(Y, Z, self.dist_arc)
        if den == 0:
            return "boundary"
        return num / den

    def label(self) -> str:
        return f"x{self.arc[0]}{self.arc[1]}"


@dataclass(frozen=True)
class ExchangeVariable:
    """(product over incoming + product over outgoing) / replaced variable."""

    incoming: tuple
    outgoing: tuple
    old: object

    def evaluate(self, Y, Z: ZMatrix):
        vals_in, vals_out = Fraction(1), Fraction(1)
        for v in self.incoming:
            x = v.evaluate(Y, Z)
            if x == "boundary":
                return "boundary"
            vals_in *= x
        for v in self.outgoing:
            x = v.evaluate(Y, Z)
            if x == "boundary":
                return "boundary"
            vals_out *= x
        denom = self.old.evaluate(Y, Z)
        if denom == "boundary" or denom == 0:
            return "boundary"
        return (vals_in + vals_out) / denom

    def label(self) -> str:
        return f"mu({self.old.label()})"


@dataclass
class Seed:
    """Quiver on arc-labelled vertices with attached variables."""

    keys: tuple[Arc, ...]
    frozen: frozenset[Arc]
    arrows: dict[tuple[Arc, Arc], int]
    variables: dict[Arc, object]
    triangulation: BicoloredTriangulation | None = None

    def mutable_keys(self) -> list[Arc]:
        return [k for k in self.keys if k not in self.frozen]

    def cluster_size(self) -> int:
        return len(self.keys)

    def arrow_multiset(self) -> frozenset:
        return frozenset((u, v, m) for (u, v), m in sorted(self.arrows.items()) if m)

    def evaluate(self, Y, Z: ZMatrix) -> dict[Arc, object]:
        return {k: self.variables[k].evaluate(Y, Z) for k in self.keys}

    def to_json(self) -> dict:
        return {
            "vertices": [{"arc": list(k), "frozen": k in self.frozen,
                          "label": self.variables[k].label()} for k in self.keys],
            "arrows": [[list(u), list(v), m]
                       for (u, v), m in sorted(self.arrows.items()) if m],
        }


def _polygon_boundary_arcs(poly: tuple[int, ...]) -> list[Arc]:
    ps = sorted(poly)
    out = []
    for idx in range(len(ps)):
        a, b = ps[idx], ps[(idx + 1) % len(ps)]
        out.append((min(a, b), max(a, b)))
    return sorted(set(out))


def black_polygons(T: BicoloredTriangulation) -> list[tuple[int, ...]]:
    return sorted(tuple(sorted(p)) for p in equivalence_class(T).black_polygons)


def default_distinguished(T: BicoloredTriangulation) -> dict[tuple[int, ...], Arc]:
    """Lexicographically smallest boundary arc of each black polygon."""
    return {poly: _polygon_boundary_arcs(poly)[0] for poly in black_polygons(T)}


def build_seed(T: BicoloredTriangulation,
               distinguished: Mapping[tuple[int, ...], Arc] | None = None) -> Seed:
    """Quiver and twistor-ratio cluster of a type (k, n) triangulation.

    The extended cluster has size 2k: each black polygon with v vertices
    carries 2(v - 2) arcs once its distinguished boundary arc is dropped.
    """
    polys = black_polygons(T)
    dist = dict(default_distinguished(T))
    if distinguished:
        for poly, arc in distinguished.items():
            poly = tuple(sorted(poly))
            arc = (min(arc), max(arc))
            if poly not in dist:
                raise ValueError(f"{poly} is not a black polygon")
            if arc not in _polygon_boundary_arcs(poly):
                raise ValueError(f"{arc} is not a boundary arc of {poly}")
            dist[poly] = arc
    keys: list[Arc] = []
    frozen: set[Arc] = set()
    variables: dict[Arc, object] = {}
    owner: dict[Arc, tuple[int, ...]] = {}
    for poly in polys:
        pset = set(poly)
        boundary = set(_polygon_boundary_arcs(poly))
        arcs_in_poly = set()
        for tri in T.black:
            if set(tri) <= pset:
                a, b, c = tri
                arcs_in_poly |= {(a, b), (b, c), (a, c)}
        d = dist[poly]
        d_area = area(T, *d)
        for arc in sorted(arcs_in_poly):
            if arc == d:
                continue
            keys.append(arc)
            owner[arc] = poly
            if arc in boundary:
                frozen.add(arc)
            variables[arc] = ArcVariable(arc, area(T, *arc), d, d_area)
    arrows: dict[tuple[Arc, Arc], int] = {}
    for tri in sorted(T.black):
        a, b, c = tri
        cycle = [(a, b), (b, c), (a, c)]  # clockwise walk a -> b -> c -> a
        for t in range(3):
            u, v = cycle[t], cycle[(t + 1) % 3]
            if u in variables and v in variables:
                if u in frozen and v in frozen:
                    continue
                arrows[(u, v)] = arrows.get((u, v), 0) + 1
    _cancel_two_cycles(arrows)
    return Seed(tuple(keys), frozenset(frozen), arrows, variables, T)


def _cancel_two_cycles(arrows: dict[tuple[Arc, Arc], int]) -> None:
    for (u, v) in list(arrows):
        if arrows.get((u, v), 0) and arrows.get((v, u), 0):
            m = min(arrows[(u, v)], arrows[(v, u)])
            arrows[(u, v)] -= m
            arrows[(v, u)] -= m
    for key in [k for k, m in arrows.items() if m == 0]:
        del arrows[key]


def eval_cluster_var(variable, Y, Z: ZMatrix):
    """Exact value, or "boundary" when a twistor in the ratio vanishes."""
    return variable.evaluate(Y, Z)


def mutate(S: Seed, key: Arc, new_key: Arc | None = None) -> Seed:
    """Standard quiver mutation at a mutable vertex.

    The new variable is (product over arrows in + product over arrows out)
    divided by the old one; frozen variables may appear in the products.
    ``new_key`` optionally relabels the mutated vertex (the flipped arc).
    """
    key = (min(key), max(key))
    if key not in S.keys:
        raise ValueError(f"no vertex {key}")
    if key in S.frozen:
        raise ValueError(f"vertex {key} is frozen")
    incoming = [(u, m) for (u, v), m in S.arrows.items() if v == key and m]
    outgoing = [(w, m) for (v, w), m in S.arrows.items() if v == key and m]
    new_var = ExchangeVariable(
        tuple(S.variables[u] for u, m in incoming for _ in range(m)),
        tuple(S.variables[w] for w, m in outgoing for _ in range(m)),
        S.variables[key],
    )
    nk = key if new_key is None else (min(new_key), max(new_key))
    rename = {key: nk}
    arrows: dict[tuple[Arc, Arc], int] = {}
    for (u, v), m in S.arrows.items():
        if not m:
            continue
        if u == key or v == key:
            u2, v2 = rename.get(v, v), rename.get(u, u)  # reversal
            arrows[(u2, v2)] = arrows.get((u2, v2), 0) + m
        else:
            arrows[(u, v)] = arrows.get((u, v), 0) + m
    for u, mu in incoming:
        for w, mw in outgoing:
            arrows[(u, w)] = arrows.get((u, w), 0) + mu * mw
    _cancel_two_cycles(arrows)
    for pair in [p for p, m in arrows.items() if m and _both_frozen(S, rename, p)]:
        del arrows[pair]
    keys = tuple(nk if k == key else k for k in S.keys)
    variables = {nk if k == key else k: (new_var if k == key else S.variables[k])
                 for k in S.keys}
    return Seed(keys, S.frozen, arrows, variables, S.triangulation)


def _both_frozen(S: Seed, rename, pair) -> bool:
    back = {new: old for old, new in rename.items()}
    u, v = pair
    return back.get(u, u) in S.frozen and back.get(v, v) in S.frozen


def noncrossing(arcs: Sequence[Arc]) -> bool:
    arcs = list(arcs)
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if arcs_cross(arcs[i], arcs[j]):
                return False
    return True


@dataclass
class AdjacencyReport:
    facet_arcs: list[Arc]
    facets_noncrossing: bool
    compatible_signs_fixed: bool
    compatible_tested: list[tuple[Arc, int]]
    samples: int
    seed: int

    def to_json(self) -> dict:
        return {
            "facet_arcs": [list(a) for a in self.facet_arcs],
            "facets_noncrossing": self.facets_noncrossing,
            "compatible_signs_fixed": self.compatible_signs_fixed,
            "compatible_tested": [[list(a), s] for a, s in self.compatible_tested],
            "samples": self.samples,
            "seed": self.seed,
        }


def _boundary_samples(T: BicoloredTriangulation, Z: ZMatrix, rng: Random,
                      per_edge: int = 3):
    """Images of closure points obtained by zeroing one edge weight."""
    G = hat_graph_of_triangulation(T)
    out = []
    for e in range(len(G.edges)):
        for _ in range(per_edge):
            weights = {f: Fraction(rng.randint(1, 1000))
                       for f in range(len(G.edges))}
            weights[e] = Fraction(0)
            try:
                P = boundary_measurement(G, weights)
            except ValueError:
                continue
            out.append(amp_map(P, Z))
    return out


def cluster_adjacency_check(T: BicoloredTriangulation, Z: ZMatrix,
                            samples: int = 100, seed: int = 0) -> AdjacencyReport:
    """Detect facet arcs of the tile from sampled boundary strata, check
    that they are pairwise noncrossing, and check that every diagonal
    compatible with them keeps a fixed twistor sign on the open tile."""
    rng = Random(seed)
    n = T.n
    arcs = sorted(T.arcs())
    facet_arcs: set[Arc] = set()
    for Yb in _boundary_samples(T, Z, rng):
        if tile_membership_m2(Yb, Z, T) is False:
            continue
        tight = [a for a in arcs if twistor(Yb, Z, a) == 0]
        if len(tight) == 1:
            facet_arcs.add(tight[0])
    facet_list = sorted(facet_arcs)
    interior = [sample_tile_point(T, Z, rng) for _ in range(samples)]
    all_pairs = [(h, l) for h in range(1, n + 1) for l in range(h + 1, n + 1)]
    compatible_tested: list[tuple[Arc, int]] = []
    signs_fixed = True
    for d in all_pairs:
        if d in facet_arcs:
            continue
        if any(arcs_cross(d, a) for a in facet_list):
            continue
        signs = {1 if twistor(Y, Z, d) > 0 else (-1 if twistor(Y, Z, d) < 0 else 0)
                 for Y in interior}
        if len(signs) == 1 and 0 not in signs:
            compatible_tested.append((d, signs.pop()))
        else:
            signs_fixed = False
    return AdjacencyReport(facet_list, noncrossing(facet_list), signs_fixed,
                           compatible_tested, samples, seed)
