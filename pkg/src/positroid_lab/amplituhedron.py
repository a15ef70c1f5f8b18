"""Amplituhedron membership, sign strata, tiles, and the B-model identity.

A positive matrix Z maps the totally nonnegative rank-k points into a
small Grassmannian; twistor coordinates (determinants against rows of Z)
are the working coordinates there.  Membership tests for one and two
extra dimensions, the general boundary sign conditions, tile inequalities
from bicolored triangulations, and sign-flip chambers all operate on
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Sequence

from .cells import sample_cell_matrix
from .exact import RatMatrix, SignVector, det, kernel_basis, rank, var, varbar
from .grassmann import PluckerVector, matrix_of_plucker, plucker_of_matrix
from .hypersimplex import WSimplex, verify_tiling
from .plabic import (
    boundary_measurement,
    dual_graph_of_triangulation,
    hat_graph_of_triangulation,
    trip_permutation,
)
from .triangulations import BicoloredTriangulation, area, arcs_of
from .util import rat_to_str, subsets

__all__ = [
    "ZMatrix",
    "make_positive_Z",
    "AmplituhedronPoint",
    "amp_map",
    "twistor",
    "twistor_via_expansion",
    "twistor_table",
    "sign_stratum",
    "m1_membership",
    "m2_interior_test",
    "general_m_boundary_signs",
    "tile_membership_m2",
    "w_chamber_membership",
    "verify_amp_tiling_m2",
    "b_point",
    "sample_tile_point",
    "sample_interior_point",
]


class ZMatrix:
    """n x p matrix with strictly positive maximal minors."""

    __slots__ = ("mat", "n", "p")

    def __init__(self, mat: RatMatrix):
        self.mat = mat
        self.n, self.p = mat.rows, mat.cols
        if self.p > self.n:
            raise ValueError("need p <= n")
        for I in subsets(self.n, self.p):
            if det(mat.submatrix([i - 1 for i in I], range(self.p))) <= 0:
                raise ValueError(f"maximal minor at rows {I} is not positive")

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.mat.row(i - 1)

    def hat_row(self, i: int) -> tuple[Fraction, ...]:
        """Twisted row: (-1)^(p-1) times row i."""
        s = Fraction(-1) ** (self.p - 1)
        return tuple(s * x for x in self.mat.row(i - 1))

    def twisted_shift(self) -> "ZMatrix":
        rows = [list(self.row(i)) for i in range(2, self.n + 1)]
        rows.append(list(self.hat_row(1)))
        return ZMatrix(RatMatrix.from_rows(rows))

    def to_json(self) -> list[list[str]]:
        return self.mat.to_json()

    def __repr__(self):
        return f"ZMatrix(n={self.n}, p={self.p})"


def make_positive_Z(n: int, p: int, nodes: Sequence) -> ZMatrix:
    """Moment-curve rows (1, t, ..., t^(p-1)) at strictly increasing nodes."""
    ts = [Fraction(t) for t in nodes]
    if len(ts) != n:
        raise ValueError(f"need {n} nodes")
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise ValueError("nodes must be strictly increasing")
    rows = [[t ** j for j in range(p)] for t in ts]
    return ZMatrix(RatMatrix.from_rows(rows))


@dataclass
class AmplituhedronPoint:
    Y: RatMatrix
    k: int
    m: int
    source: PluckerVector | None = None

    def rows(self):
        return [list(self.Y.row(r)) for r in range(self.Y.rows)]

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "Y": self.Y.to_json()}


def amp_map(C, Z: ZMatrix) -> AmplituhedronPoint:
    """Y = C Z for a totally nonnegative C (matrix or coordinate vector)."""
    if isinstance(C, PluckerVector):
        source = C
        Cmat = matrix_of_plucker(C)
    else:
        Cmat = C
        source = plucker_of_matrix(C) if C.rows > 0 else None
    if Cmat.cols != Z.n:
        raise ValueError("column count of C must match the rows of Z")
    Y = Cmat.matmul(Z.mat)
    k = Cmat.rows
    if rank(Y) != k:
        raise RuntimeError("image lost rank; input was not in the domain")
    return AmplituhedronPoint(Y, k, Z.p - k, source)


def _twistor_of_matrix(Y: RatMatrix, Z: ZMatrix, I: Sequence[int]) -> Fraction:
    rows = [list(Y.row(r)) for r in range(Y.rows)]
    for i in I:
        rows.append(list(Z.row(i)))
    return det(RatMatrix.from_rows(rows))


def twistor(Y, Z: ZMatrix, I: Sequence[int]) -> Fraction:
    """Determinant of Y's rows stacked over the rows of Z named by I."""
    if isinstance(Y, AmplituhedronPoint):
        Y = Y.Y
    if len(I) != Z.p - Y.rows:
        raise ValueError("index set has the wrong size")
    return _twistor_of_matrix(Y, Z, I)


def twistor_via_expansion(P: PluckerVector, Z: ZMatrix, I: Sequence[int]) -> Fraction:
    """Same twistor evaluated through the coordinates of the source point:
    sum over J of p_J(C) times the signed maximal minor of Z at rows J, I."""
    total = Fraction(0)
    for J in subsets(P.n, P.k):
        pj = P.coords[J]
        if pj == 0:
            continue
        seq = list(J) + list(I)
        if len(set(seq)) != len(seq):
            continue
        rows = [list(Z.row(i)) for i in seq]
        total += pj * det(RatMatrix.from_rows(rows))
    return total


def twistor_table(Y, Z: ZMatrix) -> dict[tuple[int, ...], Fraction]:
    if isinstance(Y, AmplituhedronPoint):
        Y = Y.Y
    m = Z.p - Y.rows
    return {I: _twistor_of_matrix(Y, Z, I) for I in subsets(Z.n, m)}


def twistor_table_json(table) -> dict[str, str]:
    return {",".join(map(str, I)): rat_to_str(v) for I, v in table.items()}


def sign_stratum(Y, Z: ZMatrix) -> SignVector:
    """Projective sign vector of all twistors, indexed lexicographically."""
    table = twistor_table(Y, Z)
    vals = [table[I] for I in sorted(table)]
    if all(v == 0 for v in vals):
        raise RuntimeError("all twistors vanish; Y is degenerate against Z")
    return SignVector(vals, projective=True)


def m1_membership(Y, Z: ZMatrix) -> bool:
    """One extra dimension: completed sign variation of (<YZ_i>) equals k."""
    if isinstance(Y, AmplituhedronPoint):
        Y = Y.Y
    k = Y.rows
    if Z.p != k + 1:
        raise ValueError("m1 test needs p = k + 1")
    seq = [_twistor_of_matrix(Y, Z, (i,)) for i in range(1, Z.n + 1)]
    return varbar(seq) == k


def m2_interior_test(Y, Z: ZMatrix) -> bool:
    """Two extra dimensions: consecutive twistors positive, the wrapped one
    against the twisted first row positive, and the flip count equals k."""
    if isinstance(Y, AmplituhedronPoint):
        Y = Y.Y
    k = Y.rows
    if Z.p != k + 2:
        raise ValueError("m2 test needs p = k + 2")
    n = Z.n
    for i in range(1, n):
        if _twistor_of_matrix(Y, Z, (i, i + 1)) <= 0:
            return False
    wrapped = _twistor_rows(Y, [list(Z.row(n)), list(Z.hat_row(1))])
    if wrapped <= 0:
        return False
    seq = [_twistor_of_matrix(Y, Z, (1, j)) for j in range(2, n + 1)]
    return var(seq) == k


def _twistor_rows(Y: RatMatrix, extra_rows: list[list[Fraction]]) -> Fraction:
    rows = [list(Y.row(r)) for r in range(Y.rows)] + extra_rows
    return det(RatMatrix.from_rows(rows))


def _consecutive_pair_sets(lo: int, hi: int, r: int) -> list[tuple[int, ...]]:
    """Disjoint unions of r adjacent pairs {i, i+1} inside [lo, hi]."""
    out: list[tuple[int, ...]] = []

    def rec(start: int, left: int, acc: tuple[int, ...]):
        if left == 0:
            out.append(acc)
            return
        for i in range(start, hi):
            if i + 1 <= hi:
                rec(i + 2, left - 1, acc + (i, i + 1))

    rec(lo, r, ())
    return out


def general_m_boundary_signs(Y, Z: ZMatrix) -> bool:
    """Boundary sign conditions for any m, plus the flip-count condition.

    Even m: twistors on r adjacent pairs are positive, as are the wrapped
    ones ending in Z_n and the twisted Z_1.  Odd m: sets starting at 1
    carry the sign (-1)^k and sets ending at n are positive.  On top, the
    sequence <Y Z_1 .. Z_{m-1} Z_j> for j = m..n makes exactly k flips.
    """
    if isinstance(Y, AmplituhedronPoint):
        Y = Y.Y
    k = Y.rows
    m = Z.p - k
    n = Z.n
    r = m // 2
    if m % 2 == 0:
        for I in _consecutive_pair_sets(1, n, r):
            if _twistor_of_matrix(Y, Z, I) <= 0:
                return False
        for I in _consecutive_pair_sets(2, n - 1, r - 1):
            val = _twistor_rows(Y, [list(Z.row(i)) for i in I]
                                + [list(Z.row(n)), list(Z.hat_row(1))])
            if val <= 0:
                return False
    else:
        sign_k = Fraction(-1) ** k
        for I in _consecutive_pair_sets(2, n, r):
            if sign_k * _twistor_of_matrix(Y, Z, (1,) + I) <= 0:
                return False
        for I in _consecutive_pair_sets(1, n - 1, r):
            if _twistor_of_matrix(Y, Z, I + (n,)) <= 0:
                return False
    seq = [_twistor_of_matrix(Y, Z, tuple(range(1, m)) + (j,))
           for j in range(m, n + 1)]
    return var(seq) == k


def tile_membership_m2(Y, Z: ZMatrix, T: BicoloredTriangulation,
                       strict: bool = False):
    """Tile inequalities: (-1)^area(h->j) <YZ_h Z_j> >= 0 over arcs of T.

    ``strict`` asks for the open tile; the closed test returns "boundary"
    when it passes with at least one vanishing twistor.
    """
    if isinstance(Y, AmplituhedronPoint):
        Y = Y.Y
    on_boundary = False
    for h, j in arcs_of(T):
        val = Fraction(-1) ** area(T, h, j) * _twistor_of_matrix(Y, Z, (h, j))
        if val < 0:
            return False
        if val == 0:
            if strict:
                return False
            on_boundary = True
    return "boundary" if on_boundary else True


def w_chamber_membership(Y, Z: ZMatrix, ws: WSimplex):
    """Sign-flip chamber test: for each a the flip positions of the twisted
    sequence at a must be exactly the descent set minus a.

    Returns True/False, or "boundary" when a tested twistor vanishes.
    """
    if isinstance(Y, AmplituhedronPoint):
        Y = Y.Y
    n = Z.n
    if ws.n != n:
        raise ValueError("sizes do not match")
    for a in range(1, n + 1):
        seq = []
        for j in range(1, n + 1):
            if j < a:
                val = _twistor_rows(Y, [list(Z.row(a)), list(Z.hat_row(j))])
            elif j == a:
                val = Fraction(0)
            else:
                val = _twistor_of_matrix(Y, Z, (a, j))
            seq.append(val)
        if any(v == 0 for idx, v in enumerate(seq, start=1) if idx != a):
            return "boundary"
        flips = set()
        for j in range(1, n + 1):
            nxt = seq[j % n]
            cur = seq[j - 1]
            if cur != 0 and nxt != 0 and (cur > 0) != (nxt > 0):
                flips.add(j)
        if flips != set(ws.vertex(a)) - {a}:
            return False
    return True


@dataclass
class AmpTilingReport:
    valid: bool
    k: int
    n: int
    tiles: list
    hypersimplex_report: object
    sample_audit_ok: bool
    violations: list[str]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "k": self.k,
            "n": self.n,
            "tiles": [t.to_json() for t in self.tiles],
            "hypersimplex": self.hypersimplex_report.to_json(),
            "sample_audit_ok": self.sample_audit_ok,
            "violations": self.violations,
        }


def sample_tile_point(T: BicoloredTriangulation, Z: ZMatrix,
                      rng: Random) -> AmplituhedronPoint:
    """Interior point of the tile of T: push random edge weights through
    the boundary-measurement parameterization of its cell."""
    G = hat_graph_of_triangulation(T)
    weights = {e: Fraction(rng.randint(1, 1000)) for e in range(len(G.edges))}
    P = boundary_measurement(G, weights)
    return amp_map(P, Z)


def sample_interior_point(k: int, n: int, Z: ZMatrix,
                          rng: Random) -> AmplituhedronPoint:
    """Image of a random totally positive point (certified top-cell sample)."""
    from .perms import top_cell_permutation

    C = sample_cell_matrix(top_cell_permutation(k, n), rng)
    return amp_map(C, Z)


def verify_amp_tiling_m2(tiles: Sequence[BicoloredTriangulation], Z: ZMatrix,
                         samples: int = 50, seed: int = 0) -> AmpTilingReport:
    """T-dualize the tiles and verify the rank-(k+1) hypersimplex tiling,
    then audit geometrically: sampled interior points must land in exactly
    one open tile."""
    if not tiles:
        raise ValueError("no tiles given")
    n = tiles[0].n
    k = tiles[0].k
    violations: list[str] = []
    for T in tiles:
        if (T.n, T.k) != (n, k):
            violations.append(f"tile {T!r} has mismatched type")
    duals = [trip_permutation(dual_graph_of_triangulation(T)) for T in tiles]
    hrep = verify_tiling(duals, k + 1, n)
    if not hrep.valid:
        violations.extend("T-dual: " + v for v in hrep.violations)
    rng = Random(seed)
    points = [sample_interior_point(k, n, Z, rng) for _ in range(samples)]

    def hits_of(Y):
        return sum(1 for T in tiles
                   if tile_membership_m2(Y, Z, T, strict=True) is True)

    from .util import parallel_map

    audit_ok = True
    for count in parallel_map(hits_of, points):
        if count != 1:
            audit_ok = False
            violations.append(f"sample hit {count} open tiles")
            break
    return AmpTilingReport(not violations, k, n, list(tiles), hrep,
                           audit_ok, violations)


@dataclass
class BPointReport:
    consistent: bool
    dim_ok: bool
    X: RatMatrix
    scalar: Fraction | None

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "dim_ok": self.dim_ok,
            "X": self.X.to_json(),
            "scalar": rat_to_str(self.scalar) if self.scalar is not None else None,
        }


def b_point(C: RatMatrix, Z: ZMatrix) -> BPointReport:
    """Intersect the orthogonal complement of C's row space with the column
    span of Z and compare its coordinates against the twistors of Y = CZ.

    The two coordinate vectors must agree up to one global scalar.
    """
    k = C.rows
    n = C.cols
    m = Z.p - k
    A = kernel_basis(C)            # rows span the orthogonal complement
    Zt = Z.mat.transpose()         # rows span the column space of Z
    # x in both spans: x = u A = v Zt; solve [A^T | -Zt^T] (u, v) = 0
    cols = []
    for r in range(A.rows):
        cols.append(list(A.row(r)))
    for r in range(Zt.rows):
        cols.append([-x for x in Zt.row(r)])
    system = RatMatrix.from_rows(cols).transpose()
    K = kernel_basis(system)
    xs = []
    for r in range(K.rows):
        coeffs = K.row(r)[:A.rows]
        x = [sum(c * A.entry(t, j) for t, c in enumerate(coeffs))
             for j in range(n)]
        xs.append(x)
    X = RatMatrix.from_rows(xs) if xs else RatMatrix.zero(0, n)
    dim_ok = rank(X) == m and X.rows == m
    if not dim_ok:
        return BPointReport(False, False, X, None)
    PX = plucker_of_matrix(X)
    Y = C.matmul(Z.mat)
    table = {I: _twistor_of_matrix(Y, Z, I) for I in subsets(n, m)}
    scalar = None
    consistent = True
    for I in subsets(n, m):
        p, t = PX.coords[I], table[I]
        if p == 0 and t == 0:
            continue
        if p == 0 or t == 0:
            consistent = False
            break
        ratio = t / p
        if scalar is None:
            scalar = ratio
        elif ratio != scalar:
            consistent = False
            break
    return BPointReport(consistent, dim_ok, X, scalar)
