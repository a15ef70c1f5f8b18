"""Seeds from triangulations: variables, mutation, positivity, adjacency."""

from random import Random

import pytest

from positroid_lab.amplituhedron import (
    make_positive_Z,
    sample_interior_point,
    sample_tile_point,
    twistor,
)
from positroid_lab.cluster import (
    black_polygons,
    build_seed,
    cluster_adjacency_check,
    default_distinguished,
    eval_cluster_var,
    mutate,
    noncrossing,
)
from positroid_lab.triangulations import (
    BicoloredTriangulation,
    enumerate_bicolored,
    flip,
    flippable_arcs,
)


def flipped_arc(T, arc):
    t1, t2 = (t for t in T.black if set(arc) <= set(t))
    return tuple(sorted((set(t1) | set(t2)) - set(arc)))


def test_cluster_size_is_2k():
    for n in (4, 5, 6):
        for k in range(0, n - 1):
            for T in enumerate_bicolored(n, k)[:12]:
                assert build_seed(T).cluster_size() == 2 * k


def test_empty_seed_for_k0():
    T = BicoloredTriangulation.make(4, white=[(1, 2, 3), (1, 3, 4)])
    S = build_seed(T)
    assert S.cluster_size() == 0


def test_single_black_triangle_seed():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3)], white=[(1, 3, 4)])
    S = build_seed(T)
    assert S.cluster_size() == 2
    assert set(S.keys) == {(1, 3), (2, 3)}
    assert S.frozen == frozenset({(1, 3), (2, 3)})


def test_distinguished_variable_is_one():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3)], white=[(1, 3, 4)])
    dist = default_distinguished(T)[(1, 2, 3)]
    from positroid_lab.cluster import ArcVariable
    from positroid_lab.triangulations import area

    Z = make_positive_Z(4, 3, [0, 1, 2, 3])
    rng = Random(0)
    Y = sample_tile_point(T, Z, rng)
    var = ArcVariable(dist, area(T, *dist), dist, area(T, *dist))
    assert eval_cluster_var(var, Y, Z) == 1


def test_fig_seed_structure_type_5_9():
    T = BicoloredTriangulation.make(
        9,
        black=[(7, 8, 9), (1, 7, 9), (2, 3, 7), (3, 4, 7), (4, 5, 7)],
        white=[(1, 2, 7), (5, 6, 7)])
    dist = {(1, 7, 8, 9): (1, 7), (2, 3, 4, 5, 7): (5, 7)}
    S = build_seed(T, dist)
    assert S.cluster_size() == 10
    assert sorted(black_polygons(T)) == [(1, 7, 8, 9), (2, 3, 4, 5, 7)]
    mutable = set(S.mutable_keys())
    assert mutable == {(7, 9), (3, 7), (4, 7)}
    # pinned arrows around the quadrilateral and the fan
    assert S.arrows.get(((8, 9), (7, 9))) == 1
    assert S.arrows.get(((7, 9), (7, 8))) == 1
    assert S.arrows.get(((7, 9), (1, 9))) == 1
    assert S.arrows.get(((2, 3), (3, 7))) == 1
    assert S.arrows.get(((3, 7), (2, 7))) == 1
    assert S.arrows.get(((3, 7), (3, 4))) == 1
    assert S.arrows.get(((3, 4), (4, 7))) == 1
    assert S.arrows.get(((4, 7), (3, 7))) == 1
    assert S.arrows.get(((4, 7), (4, 5))) == 1


def test_variables_positive_on_tile_negative_off():
    rng = Random(6)
    Z = make_positive_Z(4, 4, [0, 1, 2, 3])
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3), (1, 3, 4)], white=[])
    S = build_seed(T)
    for _ in range(25):
        Y = sample_tile_point(T, Z, rng)
        vals = S.evaluate(Y, Z)
        assert all(v != "boundary" and v > 0 for v in vals.values())


def test_foreign_tile_sample_breaks_positivity():
    rng = Random(3)
    Z = make_positive_Z(5, 3, [0, 1, 2, 3, 4])
    T = BicoloredTriangulation.make(5, black=[(1, 2, 3)], white=[(1, 3, 4), (1, 4, 5)])
    other = BicoloredTriangulation.make(5, black=[(3, 4, 5)], white=[(1, 2, 3), (1, 3, 5)])
    S = build_seed(T)
    bad = 0
    for _ in range(25):
        Y = sample_tile_point(other, Z, rng)
        vals = S.evaluate(Y, Z)
        if any(v == "boundary" or v <= 0 for v in vals.values()):
            bad += 1
    assert bad == 25


def test_flip_equals_mutation_small():
    rng = Random(9)
    checked = 0
    for n in (4, 5):
        for k in range(1, n - 1):
            Z = make_positive_Z(n, k + 2, list(range(n)))
            for T in enumerate_bicolored(n, k):
                S = build_seed(T)
                for arc in flippable_arcs(T):
                    Tf = flip(T, arc)
                    Sf = build_seed(Tf)
                    Sm = mutate(S, arc, new_key=flipped_arc(T, arc))
                    assert Sm.arrow_multiset() == Sf.arrow_multiset(), (T, arc)
                    for _ in range(5):
                        Y = sample_interior_point(k, n, Z, rng)
                        assert Sf.evaluate(Y, Z) == Sm.evaluate(Y, Z)
                    checked += 1
    assert checked >= 20


def test_mutation_involution():
    Z = make_positive_Z(4, 4, [0, 1, 2, 3])
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3), (1, 3, 4)], white=[])
    S = build_seed(T)
    S2 = mutate(mutate(S, (1, 3), new_key=(2, 4)), (2, 4), new_key=(1, 3))
    assert S2.arrow_multiset() == S.arrow_multiset()
    rng = Random(1)
    for _ in range(10):
        Y = sample_interior_point(2, 4, Z, rng)
        assert S2.evaluate(Y, Z) == S.evaluate(Y, Z)


def test_mutation_rejects_frozen():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3)], white=[(1, 3, 4)])
    S = build_seed(T)
    with pytest.raises(ValueError):
        mutate(S, (2, 3))


def test_exchange_reduces_to_twistor_plucker_relation():
    # inside one black quadrilateral the mutation exchange is the three-term
    # relation <ac><bd> = <ab><cd> + <ad><bc> after clearing denominators
    rng = Random(4)
    Z = make_positive_Z(4, 4, [0, 1, 2, 3])
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3), (1, 3, 4)], white=[])
    S = build_seed(T)
    Sm = mutate(S, (1, 3), new_key=(2, 4))
    for _ in range(10):
        Y = sample_interior_point(2, 4, Z, rng)
        lhs = twistor(Y, Z, (1, 3)) * twistor(Y, Z, (2, 4))
        rhs = (twistor(Y, Z, (1, 2)) * twistor(Y, Z, (3, 4))
               + twistor(Y, Z, (1, 4)) * twistor(Y, Z, (2, 3)))
        assert lhs == rhs
        x_new = Sm.evaluate(Y, Z)[(2, 4)]
        x_expected = build_seed(flip(T, (1, 3))).evaluate(Y, Z)[(2, 4)]
        assert x_new == x_expected


def test_adjacency_quadrilateral_tile():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3)], white=[(1, 3, 4)])
    Z = make_positive_Z(4, 3, [0, 1, 2, 3])
    rep = cluster_adjacency_check(T, Z, samples=40, seed=1)
    assert rep.facet_arcs == [(1, 2), (1, 3), (2, 3)]
    assert rep.facets_noncrossing
    assert rep.compatible_signs_fixed
    tested = dict(rep.compatible_tested)
    assert tested[(1, 4)] == -1 and tested[(3, 4)] == 1


def test_adjacency_all_tiles_n5():
    Z = make_positive_Z(5, 3, [0, 1, 2, 3, 4])
    from positroid_lab.hypersimplex import tile_catalog

    facet_sets = []
    for rec in tile_catalog(2, 5).values():
        rep = cluster_adjacency_check(rec.triangulation, Z, samples=25, seed=2)
        assert rep.facets_noncrossing
        assert rep.compatible_signs_fixed
        facet_sets.append(set(rep.facet_arcs))
    # no two crossing diagonals ever appear as facets of one tile
    from positroid_lab.triangulations import arcs_cross

    for fs in facet_sets:
        for a in fs:
            for b in fs:
                assert not arcs_cross(a, b)


def test_noncrossing_helper():
    assert noncrossing([(1, 3), (1, 4), (1, 2)])
    assert not noncrossing([(1, 3), (2, 4)])


def test_seed_json():
    T = BicoloredTriangulation.make(4, black=[(1, 2, 3), (1, 3, 4)], white=[])
    payload = build_seed(T).to_json()
    assert {"arc", "frozen", "label"} <= set(payload["vertices"][0].keys())
    assert payload["arrows"]
