"""Plabic graphs in a disk: trips, moves, matchings, boundary measurement.

A graph carries its embedding as a rotation system: the clockwise cyclic
order of incident edge-ends (darts) at every vertex.  Boundary vertices
are named ``b1..bn`` clockwise and have degree one.  Trips turn maximally
right at black vertices and maximally left at white ones; with clockwise
rotations that is predecessor and successor respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Mapping, Sequence

from .exact import RatMatrix, rank
from .grassmann import Matroid, PluckerVector, is_tnn
from .perms import DecoratedPermutation
from .triangulations import BicoloredTriangulation
from .util import subsets

Dart = tuple[int, int]  # (edge index, end 0 or 1)


def boundary_id(i: int) -> str:
    return f"b{i}"


class PlabicGraph:
    """Immutable plabic graph with a rotation-system embedding."""

    __slots__ = ("n", "colors", "edges", "rotations", "_incident")

    def __init__(self, n: int, colors: Mapping[str, str],
                 edges: Sequence[tuple[str, str]],
                 rotations: Mapping[str, Sequence[Dart]]):
        self.n = n
        self.colors = dict(colors)
        self.edges = tuple((str(u), str(v)) for u, v in edges)
        self.rotations = {str(v): tuple((int(e), int(s)) for e, s in rot)
                          for v, rot in rotations.items()}
        self._incident = None
        self._validate()

    @classmethod
    def build(cls, n: int, colors: Mapping[str, str],
              edges: Sequence[tuple[str, str]],
              rotations: Mapping[str, Sequence[str]] | None = None) -> "PlabicGraph":
        """Build from an edge list plus clockwise neighbour-name orderings.

        Parallel edges repeat the neighbour's name; the j-th mention at one
        endpoint is paired with the j-th from the end at the other, the way
        nested parallel edges sit in a disk.
        """
        edges = [(str(u), str(v)) for u, v in edges]
        pairs = [tuple(sorted(e)) for e in edges]
        if rotations is not None and len(pairs) != len(set(pairs)):
            raise ValueError("neighbour-name rotations cannot disambiguate "
                             "parallel edges; supply dart rotations instead")
        incident: dict[str, list[Dart]] = {}
        for idx, (u, v) in enumerate(edges):
            incident.setdefault(u, []).append((idx, 0))
            incident.setdefault(v, []).append((idx, 1))
        rot_darts: dict[str, list[Dart]] = {}
        for vtx, inc in incident.items():
            if rotations is None or vtx not in rotations:
                rot_darts[vtx] = list(inc)
                continue
            order = [str(x) for x in rotations[vtx]]
            by_name = {edges[d[0]][1 - d[1]]: d for d in inc}
            if sorted(order) != sorted(by_name):
                raise ValueError(f"rotation at {vtx} must name each neighbour once")
            rot_darts[vtx] = [by_name[name] for name in order]
        return cls(n, colors, edges, rot_darts)

    def _validate(self):
        inc = self.incident()
        for i in range(1, self.n + 1):
            b = boundary_id(i)
            if len(inc.get(b, ())) != 1:
                raise ValueError(f"boundary vertex {b} must have degree 1")
        for vtx in inc:
            if vtx not in self.rotations:
                raise ValueError(f"missing rotation for {vtx}")
            if sorted(self.rotations[vtx]) != sorted(inc[vtx]):
                raise ValueError(f"rotation at {vtx} does not match incidences")
            if not self.is_boundary(vtx) and self.colors.get(vtx) not in ("black", "white"):
                raise ValueError(f"internal vertex {vtx} needs a colour")
        for u, v in self.edges:
            if u == v:
                raise ValueError("self-loops are not supported")
        for vtx in inc:  # internal leaves only as (possibly subdivided) lollipops
            if self.is_boundary(vtx) or len(inc[vtx]) != 1:
                continue
            prev, cur = vtx, self.edges[inc[vtx][0][0]][1 - inc[vtx][0][1]]
            while not self.is_boundary(cur) and len(inc[cur]) == 2:
                nxt = next(self.edges[e][1 - s] for e, s in inc[cur]
                           if self.edges[e][1 - s] != prev)
                prev, cur = cur, nxt
            if not self.is_boundary(cur):
                raise ValueError(f"internal leaf {vtx} is not a lollipop")
        seen: set[str] = set()
        stack = [boundary_id(i) for i in range(1, self.n + 1)]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            for eid, side in inc.get(v, ()):
                stack.append(self.edges[eid][1 - side])
        stranded = {v for v in inc if not self.is_boundary(v)} - seen
        if stranded:
            raise ValueError(f"vertices not connected to the boundary: {stranded}")

    # -- queries --

    def is_boundary(self, vtx: str) -> bool:
        return vtx.startswith("b") and vtx[1:].isdigit() and 1 <= int(vtx[1:]) <= self.n

    def boundary_label(self, vtx: str) -> int:
        return int(vtx[1:])

    def incident(self) -> dict[str, list[Dart]]:
        if self._incident is None:
            inc: dict[str, list[Dart]] = {}
            for idx, (u, v) in enumerate(self.edges):
                inc.setdefault(u, []).append((idx, 0))
                inc.setdefault(v, []).append((idx, 1))
            for v in self.rotations:
                inc.setdefault(v, [])
            self._incident = inc
        return self._incident

    def degree(self, vtx: str) -> int:
        return len(self.rotations[vtx])

    def internal_vertices(self) -> list[str]:
        return sorted(v for v in self.rotations if not self.is_boundary(v))

    def dart_vertex(self, d: Dart) -> str:
        return self.edges[d[0]][d[1]]

    def dart_partner(self, d: Dart) -> Dart:
        return (d[0], 1 - d[1])

    def has_parallel_edges(self) -> bool:
        pairs = [tuple(sorted(e)) for e in self.edges]
        return len(pairs) != len(set(pairs))

    def neighbor_names(self, vtx: str) -> list[str]:
        return [self.edges[e][1 - s] for e, s in self.rotations[vtx]]

    def __repr__(self):
        return (f"PlabicGraph(n={self.n}, internal={len(self.internal_vertices())}, "
                f"edges={len(self.edges)})")

    # -- serialization --

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [{"id": v, "color": self.colors[v]}
                         for v in self.internal_vertices()],
            "edges": [[u, v] for u, v in self.edges],
            "rotations": {v: [list(d) for d in rot]
                          for v, rot in sorted(self.rotations.items())},
            "neighbors": {v: self.neighbor_names(v)
                          for v in sorted(self.rotations)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "PlabicGraph":
        colors = {rec["id"]: rec["color"] for rec in data.get("vertices", [])}
        edges = [tuple(e) for e in data["edges"]]
        if "rotations" in data:
            rotations = {v: [tuple(d) for d in rot]
                         for v, rot in data["rotations"].items()}
            return cls(data["n"], colors, edges, rotations)
        return cls.build(data["n"], colors, edges, data.get("neighbors"))

    def to_dot(self) -> str:
        lines = ["graph plabic {", "  layout=neato;"]
        for i in range(1, self.n + 1):
            lines.append(f'  b{i} [shape=plaintext, label="{i}"];')
        for v in self.internal_vertices():
            fill = self.colors[v]
            lines.append(f'  "{v}" [shape=circle, style=filled, fillcolor={fill}, '
                         f'label="", width=0.15];')
        for u, v in self.edges:
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines)

    def to_tikz(self) -> str:
        """TikZ sketch: boundary on a circle, internal vertices relaxed inward.

        Drawing only; coordinates are floats and never feed a verdict.
        """
        import math

        pos: dict[str, tuple[float, float]] = {}
        for i in range(1, self.n + 1):
            ang = math.pi / 2 - 2 * math.pi * (i - 1) / self.n
            pos[boundary_id(i)] = (2.0 * math.cos(ang), 2.0 * math.sin(ang))
        for v in self.internal_vertices():
            pos[v] = (0.0, 0.0)
        for _ in range(80):
            for v in self.internal_vertices():
                nbrs = self.neighbor_names(v)
                pos[v] = (sum(pos[u][0] for u in nbrs) / len(nbrs) or 0.01,
                          sum(pos[u][1] for u in nbrs) / len(nbrs))
        lines = ["\\begin{tikzpicture}", "  \\draw (0,0) circle (2.0);"]
        for u, v in self.edges:
            (x1, y1), (x2, y2) = pos[u], pos[v]
            lines.append(f"  \\draw ({x1:.3f},{y1:.3f}) -- ({x2:.3f},{y2:.3f});")
        for i in range(1, self.n + 1):
            x, y = pos[boundary_id(i)]
            lines.append(f"  \\fill ({x:.3f},{y:.3f}) circle (1.2pt);")
            lines.append(f"  \\node at ({1.15 * x:.3f},{1.15 * y:.3f}) {{{i}}};")
        for v in self.internal_vertices():
            x, y = pos[v]
            lines.append(f"  \\filldraw[fill={self.colors[v]}] "
                         f"({x:.3f},{y:.3f}) circle (2pt);")
        lines.append("\\end{tikzpicture}")
        return "\n".join(lines)


# -- trips -----------------------------------------------------------------


def trip(G: PlabicGraph, i: int) -> tuple[int, list[str]]:
    """Follow the trip starting at boundary vertex i; (endpoint, vertex path)."""
    start = boundary_id(i)
    departure = G.rotations[start][0]
    path = [start]
    guard = 0
    while True:
        arrival = G.dart_partner(departure)
        vtx = G.dart_vertex(arrival)
        path.append(vtx)
        if G.is_boundary(vtx):
            return G.boundary_label(vtx), path
        rot = G.rotations[vtx]
        pos = rot.index(arrival)
        step = -1 if G.colors[vtx] == "black" else 1
        departure = rot[(pos + step) % len(rot)]
        guard += 1
        if guard > 4 * len(G.edges) + 4:
            raise RuntimeError("trip failed to reach the boundary")


def trip_permutation(G: PlabicGraph) -> DecoratedPermutation:
    """Decorated trip permutation; fixed points take the lollipop colour.

    A round trip bounces at its lollipop, so the path is a palindrome and
    the turning vertex sits at the midpoint, even through degree-2 padding.
    """
    images = []
    loops, coloops = set(), set()
    for i in range(1, G.n + 1):
        end, path = trip(G, i)
        images.append(end)
        if end == i:
            turn = path[len(path) // 2]
            (loops if G.colors[turn] == "black" else coloops).add(i)
    return DecoratedPermutation(tuple(images), frozenset(loops), frozenset(coloops))


# -- bipartization and matchings --------------------------------------------


def is_bipartite_boundary_white(G: PlabicGraph) -> bool:
    for u, v in G.edges:
        cu = "black" if G.is_boundary(u) else G.colors[u]
        cv = "black" if G.is_boundary(v) else G.colors[v]
        if cu == cv:
            return False
    return True


def bipartize(G: PlabicGraph) -> tuple[PlabicGraph, dict[int, int]]:
    """Insert degree-2 vertices until the graph is bipartite with white
    vertices next to the (black-acting) boundary.

    Returns the new graph and a map old edge -> the split segment that
    carries the old edge's weight.
    """
    colors = dict(G.colors)
    edges: list[tuple[str, str]] = []
    rotations: dict[str, list[Dart]] = {}
    weight_edge: dict[int, int] = {}
    remap: dict[Dart, Dart] = {}
    fresh = 0

    def shade(v: str) -> str:
        return "black" if G.is_boundary(v) else G.colors[v]

    for eid, (u, v) in enumerate(G.edges):
        if shade(u) != shade(v):
            nid = len(edges)
            edges.append((u, v))
            weight_edge[eid] = nid
            remap[(eid, 0)] = (nid, 0)
            remap[(eid, 1)] = (nid, 1)
        else:
            mid = f"x{fresh}"
            fresh += 1
            colors[mid] = "white" if shade(u) == "black" else "black"
            e1 = len(edges)
            edges.append((u, mid))
            e2 = len(edges)
            edges.append((mid, v))
            rotations[mid] = [(e1, 1), (e2, 0)]
            weight_edge[eid] = e1
            remap[(eid, 0)] = (e1, 0)
            remap[(eid, 1)] = (e2, 1)
    for vtx, rot in G.rotations.items():
        rotations[vtx] = [remap[d] for d in rot]
    return PlabicGraph(G.n, colors, edges, rotations), weight_edge


@dataclass(frozen=True)
class Matching:
    """Almost perfect matching: edge subset plus its boundary support."""

    edges: frozenset[int]
    boundary: frozenset[int]


def matchings(G: PlabicGraph) -> tuple[Matching, ...]:
    """All almost perfect matchings, in a deterministic order.

    The graph must already be bipartite with white vertices at the
    boundary; apply :func:`bipartize` first otherwise.
    """
    if not is_bipartite_boundary_white(G):
        raise ValueError("matchings need a bipartite graph with white vertices "
                         "at the boundary (run bipartize first)")
    internal = G.internal_vertices()
    out: list[Matching] = []

    def recurse(pos: int, covered: set[str], chosen: list[int]):
        while pos < len(internal) and internal[pos] in covered:
            pos += 1
        if pos == len(internal):
            labels = frozenset(G.boundary_label(w)
                               for e in chosen for w in G.edges[e]
                               if G.is_boundary(w))
            out.append(Matching(frozenset(chosen), labels))
            return
        v = internal[pos]
        for eid, side in G.rotations[v]:
            other = G.edges[eid][1 - side]
            if other in covered:
                continue
            covered.add(v)
            covered.add(other)
            chosen.append(eid)
            recurse(pos + 1, covered, chosen)
            chosen.pop()
            covered.discard(v)
            covered.discard(other)

    recurse(0, set(), [])
    out.sort(key=lambda m: (sorted(m.boundary), sorted(m.edges)))
    return tuple(out)


def positroid_of_graph(G: PlabicGraph) -> Matroid:
    """Bases are the boundary supports of the almost perfect matchings."""
    H, _ = bipartize(G)
    ms = matchings(H)
    if not ms:
        raise ValueError("graph has no almost perfect matching")
    sizes = {len(m.boundary) for m in ms}
    if len(sizes) != 1:
        raise ValueError(f"boundary supports of unequal sizes {sizes}")
    return Matroid(G.n, sizes.pop(), frozenset(m.boundary for m in ms))


def matching_monomials(G: PlabicGraph) -> tuple[int, list[tuple[tuple[int, ...], frozenset[int]]]]:
    """Per matching: (sorted boundary support, original edges carrying weight)."""
    H, wmap = bipartize(G)
    back = {seg: old for old, seg in wmap.items()}
    ms = matchings(H)
    if not ms:
        raise ValueError("graph has no almost perfect matching")
    k = len(ms[0].boundary)
    return k, [(tuple(sorted(m.boundary)),
                frozenset(back[e] for e in m.edges if e in back))
               for m in ms]


def boundary_measurement(G: PlabicGraph,
                         weights: Mapping[int, Fraction] | None = None
                         ) -> PluckerVector:
    """Weighted matching sums p_I = sum over matchings with support I.

    ``weights`` maps edge indices of G to nonnegative rationals (all 1 by
    default); zeros are tolerated so closures of cells can be probed, but
    the result must stay a nonzero vector.
    """
    k, monos = matching_monomials(G)
    if weights is None:
        weights = {}
    coords: dict[tuple[int, ...], Fraction] = {}
    for I, mono in monos:
        w = Fraction(1)
        for e in mono:
            w *= Fraction(weights.get(e, 1))
        coords[I] = coords.get(I, Fraction(0)) + w
    P = PluckerVector(k, G.n, coords)
    assert is_tnn(P)
    return P


def cell_dimension(G: PlabicGraph, trials: int = 3, seed: int = 0) -> int:
    """Rank of the weights-to-point Jacobian at random positive weights.

    Matching sums are multiaffine in the edge weights, so unit finite
    differences give exact partials; the rank is maximised over trials.
    """
    k, monos = matching_monomials(G)
    index = {I: t for t, I in enumerate(subsets(G.n, k))}
    nedges = len(G.edges)
    rng = Random(seed)

    def plucker_at(w: list[Fraction]) -> list[Fraction]:
        vals = [Fraction(0)] * len(index)
        for I, mono in monos:
            term = Fraction(1)
            for e in mono:
                term *= w[e]
            vals[index[I]] += term
        return vals

    best = 0
    for _ in range(max(1, trials)):
        w0 = [Fraction(rng.randint(1, 1000)) for _ in range(nedges)]
        p0 = plucker_at(w0)
        i0 = next(t for t, v in enumerate(p0) if v != 0)
        rows = []
        for e in range(nedges):
            w1 = list(w0)
            w1[e] += 1
            p1 = plucker_at(w1)
            dp = [a - b for a, b in zip(p1, p0)]
            rows.append([p0[i0] * dp[t] - p0[t] * dp[i0]
                         for t in range(len(p0)) if t != i0])
        if rows:
            best = max(best, rank(RatMatrix.from_rows(rows)))
    return best


# -- faces -------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """A face of the graph sealed with the boundary circle, walked clockwise.

    ``arrivals`` holds real darts and ("arc", j, +1) markers; the latter
    means the face contains the boundary arc between j and j+1.
    """

    vertex_sequence: tuple[str, ...]
    arrivals: tuple
    is_outer: bool


def faces(G: PlabicGraph) -> list[Face]:
    n = G.n

    rotations: dict[str, list] = {v: list(rot) for v, rot in G.rotations.items()}
    for i in range(1, n + 1):
        leg = G.rotations[boundary_id(i)][0]
        rotations[boundary_id(i)] = [("arc", i, +1), leg, ("arc", i, -1)]

    def partner(d):
        if d[0] == "arc":
            _, i, direction = d
            j = i % n + 1 if direction == +1 else (i - 2) % n + 1
            return ("arc", j, -direction)
        return G.dart_partner(d)

    def vertex_of(d):
        return boundary_id(d[1]) if d[0] == "arc" else G.dart_vertex(d)

    unvisited = set()
    for rot in rotations.values():
        unvisited.update(map(_dkey, rot))
    dep_of = {}
    for rot in rotations.values():
        for d in rot:
            dep_of[_dkey(d)] = d
    out: list[Face] = []
    while unvisited:
        d = dep_of[min(unvisited)]
        start_key = _dkey(d)
        verts, arrs = [], []
        while True:
            unvisited.discard(_dkey(d))
            arrival = partner(d)
            w = vertex_of(arrival)
            verts.append(w)
            arrs.append(arrival)
            rot = rotations[w]
            pos = rot.index(arrival)
            d = rot[(pos + 1) % len(rot)]
            if _dkey(d) == start_key:
                break
        is_outer = all(a[0] == "arc" and a[2] == -1 for a in arrs)
        out.append(Face(tuple(verts), tuple(arrs), is_outer))
    return out


def _dkey(d):
    if d[0] == "arc":
        return ("arc", d[1], d[2])
    return ("edge", d[0], d[1])


# -- local moves ---------------------------------------------------------------


def enumerate_move_sites(G: PlabicGraph) -> list[tuple[str, tuple]]:
    """Applicable (move, site) pairs, deterministically ordered."""
    sites: list[tuple[str, tuple]] = []
    internal = set(G.internal_vertices())
    pair_count: dict[tuple[str, str], int] = {}
    for u, v in G.edges:
        key = tuple(sorted((u, v)))
        pair_count[key] = pair_count.get(key, 0) + 1
    for f in faces(G):
        vs = f.vertex_sequence
        if len(vs) != 4 or len(set(vs)) != 4:
            continue
        if not all(v in internal and G.degree(v) == 3 for v in vs):
            continue
        if all(G.colors[vs[i]] != G.colors[vs[(i + 1) % 4]] for i in range(4)):
            canon = min(tuple(vs[i:] + vs[:i]) for i in range(4))
            site = ("M1", canon)
            if site not in sites:
                sites.append(site)
    for eid, (u, v) in enumerate(G.edges):
        if (u in internal and v in internal and G.colors[u] == G.colors[v]
                and pair_count[tuple(sorted((u, v)))] == 1):
            sites.append(("M2_merge", (eid,)))
    for v in sorted(internal):
        deg = G.degree(v)
        if deg >= 2:
            for start in range(deg):
                for size in range(1, deg):
                    sites.append(("M2_split", (v, start, size)))
    for eid in range(len(G.edges)):
        for colour in ("black", "white"):
            sites.append(("M3_add", (eid, colour)))
    for v in sorted(internal):
        if G.degree(v) == 2:
            nbrs = G.neighbor_names(v)
            if nbrs[0] != nbrs[1]:
                sites.append(("M3_remove", (v,)))
    return sites


def apply_move(G: PlabicGraph, move: str, site: tuple) -> PlabicGraph:
    """Apply one local move at a validated site; returns a new graph."""
    if move == "M1":
        vs = tuple(site)
        squares = [s for m, s in enumerate_move_sites(G)
                   if m == "M1" and set(s) == set(vs)]
        if not squares:
            raise ValueError(f"no alternating trivalent square face at {vs}")
        colors = dict(G.colors)
        for v in vs:
            colors[v] = "white" if colors[v] == "black" else "black"
        return PlabicGraph(G.n, colors, G.edges, G.rotations)
    if move == "M2_merge":
        (eid,) = site
        u, v = G.edges[eid]
        if (G.is_boundary(u) or G.is_boundary(v) or u == v
                or G.colors[u] != G.colors[v]):
            raise ValueError("M2_merge needs a same-colour internal edge")
        if [tuple(sorted(e)) for e in G.edges].count(tuple(sorted((u, v)))) != 1:
            raise ValueError("M2_merge across parallel edges is not supported")
        return _merge_edge(G, eid)
    if move == "M2_split":
        v, start, size = site
        if G.is_boundary(v) or v not in G.colors:
            raise ValueError("M2_split needs an internal vertex")
        deg = G.degree(v)
        if not (0 <= start < deg and 1 <= size <= deg - 1):
            raise ValueError("bad split window")
        return _split_vertex(G, v, start, size)
    if move == "M3_add":
        eid, colour = site
        if colour not in ("black", "white"):
            raise ValueError("colour must be black or white")
        return _insert_degree2(G, eid, colour)
    if move == "M3_remove":
        (v,) = site
        if G.is_boundary(v) or G.degree(v) != 2:
            raise ValueError("M3_remove needs an internal degree-2 vertex")
        if G.neighbor_names(v)[0] == G.neighbor_names(v)[1]:
            raise ValueError("removal would create a self-loop")
        return _remove_degree2(G, v)
    raise ValueError(f"unknown move {move}")


def _merge_edge(G: PlabicGraph, eid: int) -> PlabicGraph:
    u, v = G.edges[eid]
    edges: list[tuple[str, str]] = []
    remap: dict[Dart, Dart] = {}
    for old, (a, b) in enumerate(G.edges):
        if old == eid:
            continue
        nid = len(edges)
        edges.append((u if a == v else a, u if b == v else b))
        remap[(old, 0)] = (nid, 0)
        remap[(old, 1)] = (nid, 1)
    rot_u, rot_v = list(G.rotations[u]), list(G.rotations[v])
    pu, pv = rot_u.index((eid, 0)), rot_v.index((eid, 1))
    spliced = rot_u[:pu] + rot_v[pv + 1:] + rot_v[:pv] + rot_u[pu + 1:]
    rotations = {}
    for w, rot in G.rotations.items():
        if w == v:
            continue
        rotations[w] = [remap[d] for d in (spliced if w == u else rot)]
    colors = {w: c for w, c in G.colors.items() if w != v}
    return PlabicGraph(G.n, colors, edges, rotations)


def _split_vertex(G: PlabicGraph, v: str, start: int, size: int) -> PlabicGraph:
    rot = list(G.rotations[v])
    deg = len(rot)
    block = [rot[(start + t) % deg] for t in range(size)]
    rest = [rot[(start + size + t) % deg] for t in range(deg - size)]
    new = v + "'"
    while new in G.rotations:
        new += "'"
    moved = set(block)
    edges = []
    for idx, (a, b) in enumerate(G.edges):
        a2 = new if (idx, 0) in moved else a
        b2 = new if (idx, 1) in moved else b
        edges.append((a2, b2))
    new_eid = len(edges)
    edges.append((v, new))
    rotations = {w: list(r) for w, r in G.rotations.items() if w != v}
    rotations[v] = rest + [(new_eid, 0)]
    rotations[new] = block + [(new_eid, 1)]
    colors = dict(G.colors)
    colors[new] = G.colors[v]
    return PlabicGraph(G.n, colors, edges, rotations)


def _insert_degree2(G: PlabicGraph, eid: int, colour: str) -> PlabicGraph:
    u, v = G.edges[eid]
    t = 0
    while f"m{t}" in G.rotations:
        t += 1
    mid = f"m{t}"
    edges, remap = [], {}
    for old, (a, b) in enumerate(G.edges):
        if old == eid:
            continue
        nid = len(edges)
        edges.append((a, b))
        remap[(old, 0)] = (nid, 0)
        remap[(old, 1)] = (nid, 1)
    e1 = len(edges)
    edges.append((u, mid))
    e2 = len(edges)
    edges.append((mid, v))
    remap[(eid, 0)] = (e1, 0)
    remap[(eid, 1)] = (e2, 1)
    rotations = {w: [remap[d] for d in rot] for w, rot in G.rotations.items()}
    rotations[mid] = [(e1, 1), (e2, 0)]
    colors = dict(G.colors)
    colors[mid] = colour
    return PlabicGraph(G.n, colors, edges, rotations)


def _remove_degree2(G: PlabicGraph, v: str) -> PlabicGraph:
    d1, d2 = G.rotations[v]
    e1, s1 = d1
    e2, s2 = d2
    x, y = G.edges[e1][1 - s1], G.edges[e2][1 - s2]
    edges, remap = [], {}
    for old, (a, b) in enumerate(G.edges):
        if old in (e1, e2):
            continue
        nid = len(edges)
        edges.append((a, b))
        remap[(old, 0)] = (nid, 0)
        remap[(old, 1)] = (nid, 1)
    nid = len(edges)
    edges.append((x, y))
    remap[(e1, 1 - s1)] = (nid, 0)
    remap[(e2, 1 - s2)] = (nid, 1)
    rotations = {}
    for w, rot in G.rotations.items():
        if w == v:
            continue
        rotations[w] = [remap[d] for d in rot]
    colors = {w: c for w, c in G.colors.items() if w != v}
    return PlabicGraph(G.n, colors, edges, rotations)


# -- reducedness -----------------------------------------------------------------


def canonical_form(G: PlabicGraph) -> tuple:
    """Embedding-aware canonical encoding with boundary labels fixed."""
    name: dict[str, str] = {boundary_id(i): f"B{i:03d}" for i in range(1, G.n + 1)}
    anchor: dict[str, Dart] = {}
    counter = 0
    queue: list[Dart] = [G.dart_partner(G.rotations[boundary_id(i)][0])
                         for i in range(1, G.n + 1)]
    while queue:
        arrival = queue.pop(0)
        vtx = G.dart_vertex(arrival)
        if vtx in name:
            continue
        name[vtx] = f"I{counter:03d}"
        anchor[vtx] = arrival
        counter += 1
        rot = G.rotations[vtx]
        pos = rot.index(arrival)
        for t in range(1, len(rot)):
            queue.append(G.dart_partner(rot[(pos + t) % len(rot)]))
    slot_of: dict[Dart, tuple[str, int]] = {}
    ordered: dict[str, list[Dart]] = {}
    for vtx, rot in G.rotations.items():
        rot = list(rot)
        if vtx in anchor:
            pos = rot.index(anchor[vtx])
            rot = rot[pos:] + rot[:pos]
        ordered[vtx] = rot
        for i, d in enumerate(rot):
            slot_of[d] = (name[vtx], i)
    enc = []
    for vtx in sorted(G.rotations, key=lambda w: name[w]):
        colour = "-" if G.is_boundary(vtx) else G.colors[vtx][0]
        enc.append((name[vtx], colour,
                    tuple(slot_of[G.dart_partner(d)] for d in ordered[vtx])))
    return (G.n, tuple(enc))


def is_reduced(G: PlabicGraph, depth: int = 50, size_slack: int = 2) -> str:
    """Bounded breadth-first search of the move class for parallel edges.

    "not_reduced" once two vertices joined by more than one edge appear;
    "reduced" when the size-capped class is exhausted without one;
    "unknown" when the depth budget runs out first.
    """
    if G.has_parallel_edges():
        return "not_reduced"
    cap = len(G.internal_vertices()) + size_slack
    seen = {canonical_form(G)}
    frontier = [G]
    for _ in range(depth):
        nxt = []
        for H in frontier:
            for move, site in enumerate_move_sites(H):
                try:
                    H2 = apply_move(H, move, site)
                except ValueError:
                    continue
                if len(H2.internal_vertices()) > cap:
                    continue
                key = canonical_form(H2)
                if key in seen:
                    continue
                seen.add(key)
                if H2.has_parallel_edges():
                    return "not_reduced"
                nxt.append(H2)
        frontier = nxt
        if not frontier:
            return "reduced"
    return "unknown"


# -- T-duality --------------------------------------------------------------------


def t_dual_graph(G: PlabicGraph) -> PlabicGraph:
    """T-dual: a black vertex in every face, a white vertex over every black
    vertex of G, and boundary legs shifted to sit between i-1 and i.

    The input must be black-trivalent (every internal black vertex of
    degree three).
    """
    for v in G.internal_vertices():
        if G.colors[v] == "black" and G.degree(v) != 3:
            raise ValueError(f"black vertex {v} is not trivalent")
    inner = [f for f in faces(G) if not f.is_outer]
    colors: dict[str, str] = {}
    edges: list[tuple[str, str]] = []
    rotations: dict[str, list[Dart]] = {}
    corner_eid: dict = {}

    for fi, f in enumerate(inner):
        fv = f"F{fi}"
        colors[fv] = "black"
        rot: list[Dart] = []
        for a in f.arrivals:
            if a[0] == "arc":
                # the face holds the boundary arc (j, j+1); the shifted
                # boundary vertex living there carries label j+1
                lbl = a[1] % G.n + 1
                eid = len(edges)
                edges.append((boundary_id(lbl), fv))
                rotations[boundary_id(lbl)] = [(eid, 0)]
                rot.append((eid, 1))
            else:
                w = G.dart_vertex(a)
                if G.is_boundary(w) or G.colors[w] != "black":
                    continue
                eid = len(edges)
                edges.append((f"W({w})", fv))
                corner_eid[(w, _dkey(a))] = eid
                rot.append((eid, 1))
        # face orbits run counterclockwise (interior on the left), so the
        # clockwise rotation at the face vertex is the reverse
        rotations[fv] = rot[::-1]
    for b in G.internal_vertices():
        if G.colors[b] != "black":
            continue
        colors[f"W({b})"] = "white"
        rotations[f"W({b})"] = [(corner_eid[(b, _dkey(d))], 0)
                                for d in G.rotations[b]]
    return PlabicGraph(G.n, colors, edges, rotations)


# -- graphs from bicolored triangulations ------------------------------------------


def _side_leg(n: int, x: int, y: int) -> int | None:
    """Boundary leg label for polygon side (x, y); None for a diagonal."""
    x, y = min(x, y), max(x, y)
    if y == x + 1:
        return x
    if x == 1 and y == n:
        return n
    return None


def dual_graph_of_triangulation(T: BicoloredTriangulation) -> PlabicGraph:
    """Tree dual to a bicolored triangulation: one vertex per triangle with
    the triangle's colour, edges across shared diagonals, and one leg per
    polygon side on the triangle containing it."""
    n = T.n
    tris = sorted(T.triangles)
    vid = {t: "D" + "_".join(map(str, t)) for t in tris}
    colors = {vid[t]: T.colour(t) for t in tris}
    owner: dict[tuple[int, int], list] = {}
    for t in tris:
        a, b, c = t
        for side in ((a, b), (b, c), (a, c)):
            owner.setdefault(side, []).append(t)
    edges: list[tuple[str, str]] = []
    diag_eid: dict = {}
    rotations: dict[str, list[Dart]] = {}
    for t in tris:
        a, b, c = t
        rot: list[Dart] = []
        for side in ((a, b), (b, c), (a, c)):  # clockwise around the triangle
            leg = _side_leg(n, *side)
            if leg is not None:
                eid = len(edges)
                edges.append((boundary_id(leg), vid[t]))
                rotations[boundary_id(leg)] = [(eid, 0)]
                rot.append((eid, 1))
            elif side in diag_eid:
                rot.append((diag_eid[side], 1))
            else:
                other = next(s for s in owner[side] if s != t)
                eid = len(edges)
                edges.append((vid[t], vid[other]))
                diag_eid[side] = eid
                rot.append((eid, 0))
        rotations[vid[t]] = rot
    return PlabicGraph(n, colors, edges, rotations)


def hat_graph_of_triangulation(T: BicoloredTriangulation) -> PlabicGraph:
    """Bipartite graph with a black vertex at each polygon corner, a
    trivalent white vertex inside each black triangle, and boundary legs."""
    n = T.n
    colors: dict[str, str] = {}
    edges: list[tuple[str, str]] = []
    rotations: dict[str, list[Dart]] = {}
    whites = {t: "T" + "_".join(map(str, t)) for t in sorted(T.black)}
    spoke_eid: dict = {}
    arcs = set()
    for a, b, c in T.triangles:
        arcs |= {tuple(sorted((a, b))), tuple(sorted((b, c))), tuple(sorted((a, c)))}
    neighbours: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for x, y in arcs:
        neighbours[x].add(y)
        neighbours[y].add(x)
    for i in range(1, n + 1):
        colors[f"P{i}"] = "black"
        rot: list[Dart] = []
        eid = len(edges)
        edges.append((boundary_id(i), f"P{i}"))
        rotations[boundary_id(i)] = [(eid, 0)]
        rot.append((eid, 1))
        # incident black triangles swept from the (i, i+1) side to (i-1, i)
        nbrs = sorted(neighbours[i], key=lambda j: (j - i) % n)
        for a, b in zip(nbrs, nbrs[1:]):
            t = tuple(sorted((i, a, b)))
            if t in T.black:
                eid = len(edges)
                edges.append((f"P{i}", whites[t]))
                spoke_eid[(t, i)] = eid
                rot.append((eid, 0))
        rotations[f"P{i}"] = rot
    for t in sorted(T.black):
        colors[whites[t]] = "white"
        rotations[whites[t]] = [(spoke_eid[(t, i)], 1) for i in t]
    return PlabicGraph(n, colors, edges, rotations)
