"""Grassmannian points as Plücker vectors; matroids and positivity tests.

A point of Gr(k, n) is stored projectively as its full list of maximal
minors.  Total nonnegativity/positivity, the matroid of a point, and the
decorated permutation attached to a totally nonnegative matrix all live
here, together with a sampled sign-variation test in the spirit of
Gantmakher and Krein.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Sequence

from .exact import RatMatrix, det, kernel_basis, rank, var, varbar
from .perms import DecoratedPermutation
from .util import (
    perm_sign,
    rat_from_str,
    rat_to_str,
    random_signed_rational,
    subset_from_key,
    subset_key,
    subsets,
)

Subset = tuple[int, ...]


class PluckerVector:
    """Projective vector of exact rationals indexed by k-subsets of [n]."""

    __slots__ = ("k", "n", "coords")

    def __init__(self, k: int, n: int, coords: dict[Subset, Fraction]):
        self.k = k
        self.n = n
        full = {}
        for I in subsets(n, k):
            full[I] = Fraction(coords.get(I, 0))
        if all(v == 0 for v in full.values()):
            raise ValueError("the zero vector is not a Grassmannian point")
        self.coords = full

    def coord(self, I) -> Fraction:
        return self.coords[tuple(sorted(I))]

    def support(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(I) for I, v in self.coords.items() if v != 0)

    def normalized_tuple(self) -> tuple[Fraction, ...]:
        """Scale so the first nonzero coordinate (lex subset order) is 1."""
        vals = [self.coords[I] for I in subsets(self.n, self.k)]
        lead = next(v for v in vals if v != 0)
        return tuple(v / lead for v in vals)

    def __eq__(self, other) -> bool:
        # projective equality
        return (
            isinstance(other, PluckerVector)
            and (self.k, self.n) == (other.k, other.n)
            and self.normalized_tuple() == other.normalized_tuple()
        )

    def __hash__(self):
        return hash((self.k, self.n, self.normalized_tuple()))

    def scale(self, c) -> "PluckerVector":
        c = Fraction(c)
        return PluckerVector(self.k, self.n, {I: c * v for I, v in self.coords.items()})

    def __repr__(self):
        nz = {subset_key(I): str(v) for I, v in self.coords.items() if v != 0}
        return f"PluckerVector(k={self.k}, n={self.n}, {nz})"

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "coords": {subset_key(I): rat_to_str(v) for I, v in self.coords.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "PluckerVector":
        coords = {subset_from_key(key): rat_from_str(v)
                  for key, v in data["coords"].items()}
        return cls(data["k"], data["n"], coords)


@dataclass(frozen=True)
class Matroid:
    n: int
    k: int
    bases: frozenset[frozenset[int]]

    def __post_init__(self):
        if not self.bases:
            raise ValueError("a matroid needs at least one basis")
        for B in self.bases:
            if len(B) != self.k or not B <= set(range(1, self.n + 1)):
                raise ValueError(f"bad basis {sorted(B)}")

    def is_basis(self, I) -> bool:
        return frozenset(I) in self.bases

    def satisfies_basis_exchange(self) -> bool:
        """Brute-force check of the exchange axiom; fine at desk sizes."""
        for B1 in self.bases:
            for B2 in self.bases:
                for b1 in B1 - B2:
                    if not any((B1 - {b1}) | {b2} in self.bases for b2 in B2 - B1):
                        return False
        return True

    def loops(self) -> frozenset[int]:
        used = set().union(*self.bases)
        return frozenset(set(range(1, self.n + 1)) - used)

    def coloops(self) -> frozenset[int]:
        common = set.intersection(*(set(B) for B in self.bases))
        return frozenset(common)

    def sorted_bases(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(B)) for B in self.bases)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k,
                "bases": [list(b) for b in self.sorted_bases()]}

    def __repr__(self):
        body = ",".join("".join(map(str, B)) if self.n < 10 else str(B)
                        for B in self.sorted_bases())
        return f"Matroid(k={self.k}, n={self.n}, bases={{{body}}})"


def uniform_matroid(k: int, n: int) -> Matroid:
    return Matroid(n, k, frozenset(frozenset(I) for I in subsets(n, k)))


def plucker_of_matrix(C: RatMatrix) -> PluckerVector:
    """All k x k column minors of a full-row-rank k x n matrix."""
    k, n = C.rows, C.cols
    if k > n:
        raise ValueError("need k <= n")
    coords = {}
    nonzero = False
    for I in subsets(n, k):
        m = det(C.columns([i - 1 for i in I]))
        coords[I] = m
        nonzero = nonzero or m != 0
    if not nonzero:
        raise ValueError("matrix is rank deficient: all maximal minors vanish")
    return PluckerVector(k, n, coords)


def matroid_of(P: PluckerVector) -> Matroid:
    bases = frozenset(frozenset(I) for I, v in P.coords.items() if v != 0)
    return Matroid(P.n, P.k, bases)


def is_tnn(P: PluckerVector) -> bool:
    vals = P.normalized_tuple()
    return all(v >= 0 for v in vals)


def is_tp(P: PluckerVector) -> bool:
    vals = P.normalized_tuple()
    return all(v > 0 for v in vals)


def three_term_relation_holds(P: PluckerVector) -> bool:
    """p_Sac p_Sbd = p_Sab p_Scd + p_Sad p_Sbc for all S and a<b<c<d."""
    n, k = P.n, P.k
    if k < 2:
        return True
    for S in subsets(n, k - 2):
        rest = [x for x in range(1, n + 1) if x not in S]
        for a, b, c, d in combinations(rest, 4):
            lhs = P.coord(S + (a, c)) * P.coord(S + (b, d))
            rhs = (P.coord(S + (a, b)) * P.coord(S + (c, d))
                   + P.coord(S + (a, d)) * P.coord(S + (b, c)))
            if lhs != rhs:
                return False
    return True


def matrix_of_plucker(P: PluckerVector) -> RatMatrix:
    """Recover a k x n representative, exact, via a chart where p_I0 != 0.

    Row r, column j holds the signed coordinate of the index sequence
    obtained from the chart basis with its r-th element replaced by j; on
    the chart columns this is p_I0 times the identity.
    """
    k, n = P.k, P.n
    if k == 0:
        return RatMatrix.zero(0, n)
    I0 = next(I for I in subsets(n, k) if P.coords[I] != 0)
    rows = []
    for r in range(k):
        row = []
        for j in range(1, n + 1):
            seq = list(I0)
            seq[r] = j
            s = perm_sign(seq)
            row.append(Fraction(0) if s == 0 else s * P.coord(seq))
        rows.append(row)
    C = RatMatrix.from_rows(rows)
    assert plucker_of_matrix(C) == P
    return C


def decorated_permutation_of(C: RatMatrix) -> DecoratedPermutation:
    """Decorated permutation of a totally nonnegative matrix.

    pi(i) is the first column j, in cyclic order after i, whose span with
    the intermediate columns absorbs column i.  Zero columns are loops and
    columns outside the span of the others are coloops.
    """
    P = plucker_of_matrix(C)
    if not is_tnn(P):
        raise ValueError("decorated permutation is only defined on the "
                         "totally nonnegative part")
    k, n = C.rows, C.cols
    cols = [C.col(j) for j in range(n)]
    images = [0] * n
    loops, coloops = set(), set()
    for i in range(1, n + 1):
        ci = cols[i - 1]
        if all(x == 0 for x in ci):
            images[i - 1] = i
            loops.add(i)
            continue
        others = [cols[(i - 1 + t) % n] for t in range(1, n)]
        if rank(RatMatrix.from_rows(others)) < rank(RatMatrix.from_rows(others + [ci])):
            images[i - 1] = i
            coloops.add(i)
            continue
        span: list = []
        for t in range(1, n):
            j = (i - 1 + t) % n + 1
            span.append(cols[j - 1])
            if rank(RatMatrix.from_rows(span)) == rank(RatMatrix.from_rows(span + [ci])):
                images[i - 1] = j
                break
    return DecoratedPermutation(tuple(images), frozenset(loops), frozenset(coloops))


@dataclass
class GKReport:
    """Outcome of the sampled sign-variation test (one-sided evidence only)."""

    mode: str
    trials: int
    seed: int
    k: int
    n: int
    row_space_ok: bool
    kernel_ok: bool
    witness: list | None
    exact_tnn: bool
    exact_tp: bool
    consistent: bool
    samples: int = 0

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        if self.witness is not None:
            out["witness"] = [rat_to_str(x) for x in self.witness]
        return out


def gk_test(C: RatMatrix, mode: str = "tnn", trials: int = 50,
            seed: int = 0) -> GKReport:
    """Sample sign variation over the row space and the kernel of C.

    For mode "tnn" every sampled row-space vector should have var <= k-1
    and every sampled nonzero kernel vector varbar >= k; mode "tp" uses
    varbar <= k-1 and var >= k.  A sampled pass proves nothing universal;
    the exact verdict from the minors rides along for cross-checking.
    """
    if mode not in ("tnn", "tp"):
        raise ValueError("mode must be 'tnn' or 'tp'")
    k, n = C.rows, C.cols
    P = plucker_of_matrix(C)
    rng = Random(seed)
    K = kernel_basis(C)
    row_ok, ker_ok = True, True
    witness = None
    samples = 0
    for _ in range(trials):
        coeffs = [random_signed_rational(rng) for _ in range(k)]
        v = [sum(c * C.entry(r, j) for r, c in enumerate(coeffs)) for j in range(n)]
        if all(x == 0 for x in v):
            continue
        samples += 1
        bad = (var(v) > k - 1) if mode == "tnn" else (varbar(v) > k - 1)
        if bad:
            row_ok = False
            if witness is None:
                witness = v
        if K.rows:
            wc = [random_signed_rational(rng) for _ in range(K.rows)]
            w = [sum(c * K.entry(r, j) for r, c in enumerate(wc)) for j in range(n)]
            if any(x != 0 for x in w):
                ok = (varbar(w) >= k) if mode == "tnn" else (var(w) >= k)
                if not ok:
                    ker_ok = False
                    if witness is None:
                        witness = w
    exact_tnn, exact_tp = is_tnn(P), is_tp(P)
    target = exact_tnn if mode == "tnn" else exact_tp
    sampled_pass = row_ok and ker_ok
    # sampling can only refute; a refutation must not happen on a true positive
    consistent = (not target) or sampled_pass
    return GKReport(mode, trials, seed, k, n, row_ok, ker_ok, witness,
                    exact_tnn, exact_tp, consistent, samples)


def random_matrix(rows: int, cols: int, rng: Random, hi: int = 1000) -> RatMatrix:
    return RatMatrix(rows, cols,
                     [random_signed_rational(rng, hi) for _ in range(rows * cols)])


def vandermonde_matrix(k: int, nodes: Sequence) -> RatMatrix:
    """Rows (1, t, ..., t^(k-1)) transposed: k x n with columns at the nodes.

    Strictly increasing nodes give a totally positive point.
    """
    nodes = [Fraction(t) for t in nodes]
    return RatMatrix.from_rows([[t ** r for t in nodes] for r in range(k)])
