"""Bicolored triangulations, subdivisions, flips, and the area statistic."""

import math

import pytest

from positroid_lab.triangulations import (
    BicoloredTriangulation,
    all_triangulations,
    area,
    arcs_cross,
    class_representative,
    enumerate_bicolored,
    enumerate_subdivisions,
    equivalence_class,
    flip,
    flippable_arcs,
)


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def test_triangulation_counts():
    for n in (3, 4, 5, 6, 7):
        assert len(all_triangulations(n)) == catalan(n - 2)


def test_validation_rejects_crossing():
    with pytest.raises(ValueError):
        BicoloredTriangulation.make(4, black=[(1, 2, 4)], white=[(1, 2, 3)])


def test_equivalence_class_merges_like_colors():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3), (1, 3, 4)], white=[])
    S = equivalence_class(T)
    assert S.black_polygons == frozenset({(1, 2, 3, 4)})
    T2 = BicoloredTriangulation.make(4, black=[(1, 2, 4), (2, 3, 4)], white=[])
    assert equivalence_class(T2) == S


def test_all_white_single_class():
    classes = enumerate_subdivisions(6, 0)
    assert len(classes) == 1
    assert classes[0].white_polygons == frozenset({(1, 2, 3, 4, 5, 6)})


def test_class_representative_round_trip():
    for T in enumerate_bicolored(5, 2):
        S = equivalence_class(T)
        assert equivalence_class(class_representative(S)) == S


def test_flip_black_square():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3), (1, 3, 4)], white=[])
    assert flippable_arcs(T) == [(1, 3)]
    T2 = flip(T, (1, 3))
    assert T2.black == frozenset({(1, 2, 4), (2, 3, 4)})
    assert flip(T2, (2, 4)) == T
    assert equivalence_class(T2) == equivalence_class(T)


def test_flip_rejects_frozen_or_white():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3)], white=[(1, 3, 4)])
    with pytest.raises(ValueError):
        flip(T, (1, 3))  # between black and white
    with pytest.raises(ValueError):
        flip(T, (1, 2))  # boundary side


def test_area_pinned():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3)], white=[(1, 3, 4)])
    assert area(T, 1, 3) == 1
    assert area(T, 1, 4) == 1
    assert area(T, 1, 2) == 0 and area(T, 3, 4) == 0
    T2 = BicoloredTriangulation.make(4, black=[(1, 2, 4)], white=[(2, 3, 4)])
    assert area(T2, 2, 4) == 0
    assert area(T2, 1, 4) == 1


def test_area_incompatible_arc_rejected():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3)], white=[(1, 3, 4)])
    with pytest.raises(ValueError):
        area(T, 2, 4)


def test_area_total_black():
    for T in enumerate_bicolored(6, 2)[:10]:
        assert area(T, 1, 6) == 2


def test_area_class_invariant():
    T = BicoloredTriangulation.make(5, black=[(1, 2, 3), (1, 3, 4)], white=[(1, 4, 5)])
    Tf = BicoloredTriangulation.make(5, black=[(1, 2, 4), (2, 3, 4)], white=[(1, 4, 5)])
    for h in range(1, 6):
        for j in range(h + 1, 6):
            try:
                a1 = area(T, h, j)
            except ValueError:
                continue
            try:
                a2 = area(Tf, h, j)
            except ValueError:
                continue
            assert a1 == a2


def test_arcs_cross():
    assert arcs_cross((1, 3), (2, 4))
    assert not arcs_cross((1, 3), (3, 5))
    assert not arcs_cross((1, 2), (3, 4))


def test_subdivision_counts_match_tiles():
    # one black triangle: every 3-subset of the n-gon is a class
    assert len(enumerate_subdivisions(5, 1)) == math.comb(5, 3)
    assert len(enumerate_subdivisions(6, 1)) == math.comb(6, 3)
