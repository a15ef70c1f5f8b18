"""Decorated permutations: the combinatorial index set of positroid cells.

A decorated permutation is a permutation of [n] whose fixed points carry a
loop/coloop colour.  Anti-excedance count gives the type (k, n); the T-dual
rotates the one-line word one step to the right and declares any new fixed
points to be loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

__all__ = [
    "DecoratedPermutation",
    "anti_excedances",
    "type_of",
    "t_dual",
    "t_dual_inverse",
    "closure_leq",
    "affine_lift",
    "parse_decorated",
    "format_decorated",
    "enumerate_decorated",
    "top_cell_permutation",
]


@dataclass(frozen=True)
class DecoratedPermutation:
    images: tuple[int, ...]
    loops: frozenset[int]
    coloops: frozenset[int]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.images}")
        fixed = {i + 1 for i, v in enumerate(self.images) if v == i + 1}
        if self.loops | self.coloops != fixed or self.loops & self.coloops:
            raise ValueError("decorations must partition the fixed points")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self, j: int) -> int:
        return self.images.index(j) + 1

    @property
    def fixed_points(self) -> frozenset[int]:
        return self.loops | self.coloops

    def is_loopless(self) -> bool:
        return not self.loops

    def is_coloopless(self) -> bool:
        return not self.coloops

    def __repr__(self):
        return format_decorated(self)

    def to_json(self) -> dict:
        return {
            "images": list(self.images),
            "loops": sorted(self.loops),
            "coloops": sorted(self.coloops),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DecoratedPermutation":
        return cls(
            tuple(data["images"]),
            frozenset(data.get("loops", ())),
            frozenset(data.get("coloops", ())),
        )


def make(images, loops=(), coloops=()) -> DecoratedPermutation:
    return DecoratedPermutation(tuple(images), frozenset(loops), frozenset(coloops))


def anti_excedances(pi: DecoratedPermutation) -> frozenset[int]:
    """{i : the preimage of i lies above i} together with the coloops."""
    ae = {i for i in range(1, pi.n + 1) if pi.inverse(i) > i}
    return frozenset(ae | pi.coloops)


def type_of(pi: DecoratedPermutation) -> tuple[int, int]:
    return len(anti_excedances(pi)), pi.n


def t_dual(pi: DecoratedPermutation) -> DecoratedPermutation:
    """Rotate the one-line word right by one; new fixed points become loops.

    Defined for loopless input only; sends type (k+1, n) to type (k, n).
    """
    if pi.loops:
        raise ValueError("T-dual is defined for loopless permutations only")
    a = pi.images
    images = (a[-1],) + a[:-1]
    loops = frozenset(i + 1 for i, v in enumerate(images) if v == i + 1)
    return DecoratedPermutation(images, loops, frozenset())


def t_dual_inverse(pi_hat: DecoratedPermutation) -> DecoratedPermutation:
    """Left rotation; inverts ``t_dual`` on coloopless input."""
    if pi_hat.coloops:
        raise ValueError("inverse T-dual is defined for coloopless permutations only")
    a = pi_hat.images
    images = a[1:] + (a[0],)
    coloops = frozenset(i + 1 for i, v in enumerate(images) if v == i + 1)
    return DecoratedPermutation(images, frozenset(), coloops)


def closure_leq(mu: DecoratedPermutation, pi: DecoratedPermutation) -> bool:
    """Closure order via containment of the associated positroid bases."""
    if mu.n != pi.n:
        raise ValueError("permutations must share the same n")
    from .cells import positroid_of_perm

    return positroid_of_perm(mu).bases <= positroid_of_perm(pi).bases


def affine_lift(pi: DecoratedPermutation) -> tuple[int, ...]:
    """Bounded affine representative: f(i) in [i, i+n], loops at i, coloops at i+n."""
    n = pi.n
    out = []
    for i in range(1, n + 1):
        v = pi(i)
        if v == i:
            out.append(i + n if i in pi.coloops else i)
        else:
            out.append(v if v > i else v + n)
    return tuple(out)


def format_decorated(pi: DecoratedPermutation) -> str:
    toks = []
    for i in range(1, pi.n + 1):
        v = pi(i)
        if i in pi.loops:
            toks.append(f"{v}_")
        elif i in pi.coloops:
            toks.append(f"{v}^")
        else:
            toks.append(str(v))
    return "(" + ",".join(toks) + ")"


def parse_decorated(text: str, fixed_default: str | None = None) -> DecoratedPermutation:
    """Parse "(3,1,4,2)" style text; "2_" marks a loop, "7^" a coloop.

    Unmarked fixed points are rejected unless ``fixed_default`` names the
    decoration ("loop" or "coloop") they should take.
    """
    body = text.strip().strip("()")
    images, loops, coloops = [], set(), set()
    for pos, tok in enumerate(t.strip() for t in body.split(",")):
        if tok.endswith("_"):
            loops.add(pos + 1)
            tok = tok[:-1]
        elif tok.endswith("^"):
            coloops.add(pos + 1)
            tok = tok[:-1]
        images.append(int(tok))
    for i in loops | coloops:
        if images[i - 1] != i:
            raise ValueError(f"decoration at {i} is not a fixed point")
    for i, v in enumerate(images):
        if v == i + 1 and (i + 1) not in loops | coloops:
            if fixed_default == "loop":
                loops.add(i + 1)
            elif fixed_default == "coloop":
                coloops.add(i + 1)
            else:
                raise ValueError(f"fixed point {i + 1} needs a loop/coloop mark")
    return DecoratedPermutation(tuple(images), frozenset(loops), frozenset(coloops))


def enumerate_decorated(n: int, k: int | None = None, loopless: bool = False,
                        coloopless: bool = False):
    """All decorated permutations on [n], optionally filtered by type."""
    for images in permutations(range(1, n + 1)):
        fixed = [i + 1 for i, v in enumerate(images) if v == i + 1]
        for mask in range(1 << len(fixed)):
            loops = frozenset(f for b, f in enumerate(fixed) if mask >> b & 1)
            coloops = frozenset(fixed) - loops
            if loopless and loops:
                continue
            if coloopless and coloops:
                continue
            pi = DecoratedPermutation(images, loops, coloops)
            if k is None or type_of(pi)[0] == k:
                yield pi


def top_cell_permutation(k: int, n: int) -> DecoratedPermutation:
    """i -> i + k cyclically; indexes the unique top-dimensional cell."""
    if k == 0:
        return DecoratedPermutation(tuple(range(1, n + 1)), frozenset(range(1, n + 1)),
                                    frozenset())
    if k == n:
        return DecoratedPermutation(tuple(range(1, n + 1)), frozenset(),
                                    frozenset(range(1, n + 1)))
    images = tuple((i + k - 1) % n + 1 for i in range(1, n + 1))
    return DecoratedPermutation(images, frozenset(), frozenset())
