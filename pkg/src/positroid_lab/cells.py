"""Positroid cells from decorated permutations.

A cell is reconstructed by peeling its decorated permutation down to
lollipops: fixed points strip off directly, and otherwise some adjacent
pair (i, i+1) is an ascent of the bounded affine lift, where a bridge can
be removed.  Replaying the peeling builds both a plabic graph and an
exact totally nonnegative matrix realization; every result is certified
by recomputing the decorated permutation of the realization, so a wrong
reconstruction cannot escape.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from random import Random

from .exact import RatMatrix
from .grassmann import Matroid, decorated_permutation_of, plucker_of_matrix, matroid_of
from .perms import DecoratedPermutation, affine_lift
from .plabic import PlabicGraph, boundary_id, trip_permutation

__all__ = [
    "bridge_decomposition",
    "graph_of_perm",
    "matrix_realization",
    "positroid_of_perm",
    "cell_dim_of_perm",
    "positroid_catalog",
    "sample_cell_matrix",
]

Step = tuple  # ("lollipop", i, colour) or ("bridge", i)


def _delete_fixed(pi: DecoratedPermutation, i: int) -> DecoratedPermutation:
    """Remove fixed point i and relabel; other trips are unaffected."""
    images = []
    for pos, v in enumerate(pi.images, start=1):
        if pos == i:
            continue
        images.append(v - 1 if v > i else v)
    shift = lambda S: frozenset(x - 1 if x > i else x for x in S if x != i)
    return DecoratedPermutation(tuple(images), shift(pi.loops), shift(pi.coloops))


def _unbridge(pi: DecoratedPermutation, i: int) -> DecoratedPermutation:
    """Swap the targets of positions i and i+1; new fixed points get the
    colour forced by the bridge endpoints (coloop at i, loop at i+1)."""
    n = pi.n
    images = list(pi.images)
    images[i - 1], images[i] = images[i], images[i - 1]
    loops, coloops = set(pi.loops), set(pi.coloops)
    if images[i - 1] == i:
        coloops.add(i)
    if images[i] == i + 1:
        loops.add(i + 1)
    return DecoratedPermutation(tuple(images), frozenset(loops), frozenset(coloops))


def _ascents(pi: DecoratedPermutation) -> list[int]:
    """Positions i < n with f(i) < f(i+1) in the bounded affine lift.

    Such a position always exists for a permutation without fixed points.
    """
    f = affine_lift(pi)
    return [i for i in range(1, pi.n) if f[i - 1] < f[i]]


@lru_cache(maxsize=None)
def bridge_decomposition(pi: DecoratedPermutation) -> tuple[Step, ...]:
    """Peeling order: lollipop strips and bridge removals down to nothing.

    Replay the steps in reverse to rebuild the cell.  The number of bridge
    steps equals the dimension of the cell.
    """
    steps: list[Step] = []
    current = pi
    while current.n > 0:
        fixed = sorted(current.fixed_points)
        if fixed:
            i = fixed[0]
            colour = "black" if i in current.loops else "white"
            steps.append(("lollipop", i, colour))
            current = _delete_fixed(current, i)
            continue
        asc = _ascents(current)
        if not asc:
            raise RuntimeError(f"no ascent available for {current}")
        i = asc[0]
        steps.append(("bridge", i))
        current = _unbridge(current, i)
    return tuple(steps)


def _lollipop_insert_graph(G: PlabicGraph, i: int, colour: str) -> PlabicGraph:
    """Insert a lollipop at boundary position i, shifting labels >= i up."""
    n = G.n + 1

    def shift(v: str) -> str:
        if v.startswith("b") and v[1:].isdigit():
            lbl = int(v[1:])
            return boundary_id(lbl + 1) if lbl >= i else v
        return v

    edges = [(shift(u), shift(v)) for u, v in G.edges]
    rotations = {shift(v): list(rot) for v, rot in G.rotations.items()}
    colors = dict(G.colors)
    tip = f"L{i}"
    while tip in colors:
        tip += "'"
    eid = len(edges)
    edges.append((boundary_id(i), tip))
    rotations[boundary_id(i)] = [(eid, 0)]
    rotations[tip] = [(eid, 1)]
    colors[tip] = colour
    return PlabicGraph(n, colors, edges, rotations)


def _bridge_insert_graph(G: PlabicGraph, i: int) -> PlabicGraph:
    """Bridge between legs i and i+1: white u on leg i, black v on leg i+1,
    joined by an edge running along the boundary arc from i to i+1.

    A lollipop tip sitting on a bridged leg always has the bridge vertex's
    colour (white tips under u, black under v) and is absorbed into it.
    """
    t = 0
    while f"u{t}" in G.rotations or f"v{t}" in G.rotations:
        t += 1
    u, v = f"u{t}", f"v{t}"
    inc = G.incident()
    ei, si = G.rotations[boundary_id(i)][0]
    ej, sj = G.rotations[boundary_id(i + 1)][0]
    x_i = G.edges[ei][1 - si]
    x_j = G.edges[ej][1 - sj]
    tip_i = len(inc[x_i]) == 1
    tip_j = len(inc[x_j]) == 1
    if tip_i and G.colors[x_i] != "white":
        raise RuntimeError(f"unexpected {G.colors[x_i]} tip under leg {i}")
    if tip_j and G.colors[x_j] != "black":
        raise RuntimeError(f"unexpected {G.colors[x_j]} tip under leg {i + 1}")
    drop = {ei, ej}
    edges, remap = [], {}
    for old, (a, b) in enumerate(G.edges):
        if old in drop:
            continue
        nid = len(edges)
        edges.append((a, b))
        remap[(old, 0)] = (nid, 0)
        remap[(old, 1)] = (nid, 1)
    e_bi = len(edges)
    edges.append((boundary_id(i), u))
    e_bj = len(edges)
    edges.append((boundary_id(i + 1), v))
    e_uv = len(edges)
    edges.append((u, v))
    if tip_i:
        rot_u = [(e_bi, 1), (e_uv, 0)]
    else:
        e_ui = len(edges)
        edges.append((u, x_i))
        remap[(ei, 1 - si)] = (e_ui, 1)
        rot_u = [(e_bi, 1), (e_uv, 0), (e_ui, 0)]
    if tip_j:
        rot_v = [(e_bj, 1), (e_uv, 1)]
    else:
        e_vj = len(edges)
        edges.append((v, x_j))
        remap[(ej, 1 - sj)] = (e_vj, 1)
        rot_v = [(e_bj, 1), (e_vj, 0), (e_uv, 1)]
    rotations = {}
    skip = {boundary_id(i), boundary_id(i + 1)}
    if tip_i:
        skip.add(x_i)
    if tip_j:
        skip.add(x_j)
    for w, rot in G.rotations.items():
        if w in skip:
            continue
        rotations[w] = [remap[d] for d in rot]
    rotations[boundary_id(i)] = [(e_bi, 0)]
    rotations[boundary_id(i + 1)] = [(e_bj, 0)]
    rotations[u] = rot_u
    rotations[v] = rot_v
    colors = {w: c for w, c in G.colors.items() if w not in skip}
    colors[u] = "white"
    colors[v] = "black"
    return PlabicGraph(G.n, colors, edges, rotations)


def _empty_graph() -> PlabicGraph:
    return PlabicGraph(0, {}, [], {})


@lru_cache(maxsize=None)
def graph_of_perm(pi: DecoratedPermutation) -> PlabicGraph:
    """Plabic graph whose cell is indexed by ``pi`` (trip permutation checked)."""
    steps = bridge_decomposition(pi)
    G = _empty_graph()
    for step in reversed(steps):
        if step[0] == "lollipop":
            _, i, colour = step
            G = _lollipop_insert_graph(G, i, colour)
        else:
            G = _bridge_insert_graph(G, step[1])
    got = trip_permutation(G)
    if got != pi:
        raise RuntimeError(f"bridge replay built {got} instead of {pi}")
    return G


def _twisted_rotate_left(C: RatMatrix) -> RatMatrix:
    """Send columns (c1,...,cn) to (c2,...,cn, (-1)^(k-1) c1); keeps minors
    nonnegative and rotates the cell labels down by one."""
    k, n = C.rows, C.cols
    s = Fraction(-1) ** (k - 1)
    rows = [[C.entry(r, (j + 1) % n) * (s if j == n - 1 else 1) for j in range(n)]
            for r in range(k)]
    return RatMatrix.from_rows(rows)


def _twisted_rotate_right(C: RatMatrix) -> RatMatrix:
    k, n = C.rows, C.cols
    s = Fraction(-1) ** (k - 1)
    rows = [[C.entry(r, (j - 1) % n) * (s if j == 0 else 1) for j in range(n)]
            for r in range(k)]
    return RatMatrix.from_rows(rows)


def _lollipop_insert_matrix(C: RatMatrix, i: int, colour: str) -> RatMatrix:
    """Insert a zero column (loop) or a fresh unit column and row (coloop).

    Coloops are inserted at the last position, reached by twisted rotation,
    so that no minor changes sign.
    """
    k, n = C.rows, C.cols
    if colour == "black":
        rows = [list(C.row(r)) for r in range(k)]
        for row in rows:
            row.insert(i - 1, Fraction(0))
        if k == 0:
            return RatMatrix.zero(0, n + 1)
        return RatMatrix.from_rows(rows)
    for _ in range(n + 1 - i):
        C = _twisted_rotate_right(C)
    rows = [list(C.row(r)) + [Fraction(0)] for r in range(k)]
    rows.append([Fraction(0)] * n + [Fraction(1)])
    out = RatMatrix.from_rows(rows)
    for _ in range(n + 1 - i):
        out = _twisted_rotate_left(out)
    return out


def _bridge_matrix(C: RatMatrix, i: int, t: Fraction) -> RatMatrix:
    """Column operation c_{i+1} += t c_i, t > 0; preserves nonnegativity."""
    rows = [list(C.row(r)) for r in range(C.rows)]
    for row in rows:
        row[i] += t * row[i - 1]
    return RatMatrix.from_rows(rows)


def matrix_realization(pi: DecoratedPermutation,
                       params: list[Fraction] | None = None,
                       seed: int = 0) -> RatMatrix:
    """Exact totally nonnegative matrix whose point lies in the cell of pi.

    ``params`` supplies one positive rational per bridge (dimension many);
    omitted parameters are drawn from a seeded generator.  The result is
    certified by recomputing its decorated permutation.
    """
    steps = bridge_decomposition(pi)
    nbridges = sum(1 for s in steps if s[0] == "bridge")
    rng = Random(seed)
    if params is None:
        params = [Fraction(rng.randint(1, 1000)) for _ in range(nbridges)]
    if len(params) != nbridges:
        raise ValueError(f"cell of {pi} needs {nbridges} parameters")
    if any(t <= 0 for t in params):
        raise ValueError("bridge parameters must be positive")
    C = RatMatrix.zero(0, 0)
    pidx = nbridges
    for step in reversed(steps):
        if step[0] == "lollipop":
            _, i, colour = step
            C = _lollipop_insert_matrix(C, i, colour)
        else:
            pidx -= 1
            C = _bridge_matrix(C, step[1], Fraction(params[pidx]))
    got = decorated_permutation_of(C)
    if got != pi:
        raise RuntimeError(f"realization of {pi} landed in cell {got}")
    return C


def sample_cell_matrix(pi: DecoratedPermutation, rng: Random) -> RatMatrix:
    """Random interior point of the cell, exact and certified.

    Parameters are ratios of uniform integers so products of them spread
    both above and below 1; plain integer parameters pile up in one corner
    of the cell and starve whole chambers downstream.
    """
    steps = bridge_decomposition(pi)
    nbridges = sum(1 for s in steps if s[0] == "bridge")
    params = [Fraction(rng.randint(1, 1000), rng.randint(1, 1000))
              for _ in range(nbridges)]
    return matrix_realization(pi, params)


@lru_cache(maxsize=None)
def positroid_of_perm(pi: DecoratedPermutation) -> Matroid:
    """The positroid of the cell indexed by ``pi``.

    Support of any certified realization: the recomputed decorated
    permutation pins the cell, and on a cell the vanishing pattern of the
    coordinates is constant.
    """
    C = matrix_realization(pi)
    return matroid_of(plucker_of_matrix(C))


@lru_cache(maxsize=None)
def cell_dim_of_perm(pi: DecoratedPermutation) -> int:
    """Dimension of the cell = number of bridges in the peeling."""
    return sum(1 for s in bridge_decomposition(pi) if s[0] == "bridge")


@lru_cache(maxsize=None)
def positroid_catalog(k: int, n: int) -> dict[frozenset, DecoratedPermutation]:
    """All rank-k positroids on [n], keyed by basis set."""
    from .perms import enumerate_decorated

    out: dict[frozenset, DecoratedPermutation] = {}
    for pi in enumerate_decorated(n, k=k):
        M = positroid_of_perm(pi)
        out[frozenset(M.bases)] = pi
    return out
