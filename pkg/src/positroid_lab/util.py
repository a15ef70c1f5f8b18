"""Shared helpers: rational serialization, seeded sampling, small iterators."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def rat(p, q=1) -> Fraction:
    return Fraction(p, q)


def rat_to_str(x: Fraction) -> str:
    """Serialize as "p/q" with the denominator always written."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of 1..n as sorted tuples, in lexicographic order."""
    return list(combinations(range(1, n + 1), k))


def subset_key(I: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(I))


def subset_from_key(s: str) -> tuple[int, ...]:
    if s == "":
        return ()
    return tuple(sorted(int(t) for t in s.split(",")))


def random_positive_rational(rng: Random, lo: int = 1, hi: int = 1000) -> Fraction:
    """Random integer-valued rational; numerator uniform in [lo, hi]."""
    return Fraction(rng.randint(lo, hi))


def random_signed_rational(rng: Random, hi: int = 1000) -> Fraction:
    v = 0
    while v == 0:
        v = rng.randint(-hi, hi)
    return Fraction(v)


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if entries repeat."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sgn = 1
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    seen = [False] * len(seq)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, cyc = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            cyc += 1
        if cyc % 2 == 0:
            sgn = -sgn
    return sgn


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("POSITROID_LAB_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable[[T], U], items: Sequence[T]) -> list[U]:
    """Map preserving order; uses a thread pool if POSITROID_LAB_THREADS > 1."""
    workers = thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
