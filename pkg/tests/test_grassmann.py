"""Plücker vectors, matroids, positivity, and the sampled variation test."""

from fractions import Fraction
from random import Random

import pytest

from positroid_lab.exact import RatMatrix
from positroid_lab.grassmann import (
    GKReport,
    Matroid,
    PluckerVector,
    decorated_permutation_of,
    gk_test,
    is_tnn,
    is_tp,
    matrix_of_plucker,
    matroid_of,
    plucker_of_matrix,
    random_matrix,
    three_term_relation_holds,
    uniform_matroid,
    vandermonde_matrix,
)
from positroid_lab.perms import parse_decorated


def pinned_matrix() -> RatMatrix:
    return RatMatrix.from_rows([[1, 0, -1, -2], [0, 1, 2, 4]])


def test_plucker_pinned_values():
    P = plucker_of_matrix(pinned_matrix())
    expected = {(1, 2): 1, (1, 3): 2, (1, 4): 4, (2, 3): 1, (2, 4): 2, (3, 4): 0}
    for I, v in expected.items():
        assert P.coord(I) == v


def test_plucker_zero_column():
    C = RatMatrix.from_rows([[1, 0, 0], [0, 1, 0]])
    P = plucker_of_matrix(C)
    assert P.coord((1, 2)) == 1
    assert P.coord((1, 3)) == 0 and P.coord((2, 3)) == 0


def test_plucker_rejects_rank_deficient():
    with pytest.raises(ValueError):
        plucker_of_matrix(RatMatrix.from_rows([[1, 2], [2, 4]]))


def test_three_term_identity_random():
    rng = Random(3)
    for _ in range(20):
        C = RatMatrix(2, 4, [Fraction(rng.randint(-9, 9)) for _ in range(8)])
        try:
            P = plucker_of_matrix(C)
        except ValueError:
            continue
        assert three_term_relation_holds(P)
        assert P.coord((1, 3)) * P.coord((2, 4)) == \
            P.coord((1, 2)) * P.coord((3, 4)) + P.coord((1, 4)) * P.coord((2, 3))


def test_matroid_pinned():
    M = matroid_of(plucker_of_matrix(pinned_matrix()))
    assert M.sorted_bases() == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
    assert M.satisfies_basis_exchange()


def test_matroid_uniform_and_single():
    C = vandermonde_matrix(2, [1, 2, 3, 4])
    assert matroid_of(plucker_of_matrix(C)).bases == uniform_matroid(2, 4).bases
    single = PluckerVector(2, 4, {(1, 3): Fraction(5)})
    M = matroid_of(single)
    assert M.sorted_bases() == [(1, 3)]
    assert M.satisfies_basis_exchange()


def test_tnn_tp_pinned():
    P = plucker_of_matrix(pinned_matrix())
    assert is_tnn(P) and not is_tp(P)


def test_tp_vandermonde_and_sign_flip():
    P = plucker_of_matrix(vandermonde_matrix(2, [1, 2, 3, 4]))
    assert is_tp(P) and is_tnn(P)
    flipped = dict(P.coords)
    flipped[(2, 3)] = -flipped[(2, 3)]
    assert not is_tnn(PluckerVector(2, 4, flipped))


def test_tnn_global_sign_irrelevant():
    P = plucker_of_matrix(pinned_matrix())
    assert is_tnn(P.scale(-3))


def test_decorated_permutation_pinned():
    assert decorated_permutation_of(pinned_matrix()) == parse_decorated("(3,1,4,2)")


def test_decorated_permutation_lollipops():
    C = RatMatrix.from_rows([[1, 0, 0], [0, 0, 1]])
    pi = decorated_permutation_of(C)
    assert pi.coloops == frozenset({1, 3})
    assert pi.loops == frozenset({2})


def test_decorated_permutation_rejects_non_tnn():
    C = RatMatrix.from_rows([[1, 0, -1], [0, 1, 1]])  # minors 1, 1, 1
    decorated_permutation_of(C)
    bad = RatMatrix.from_rows([[1, 0, 1], [0, 1, 1]])  # p23 = -1
    with pytest.raises(ValueError):
        decorated_permutation_of(bad)


def test_matrix_of_plucker_round_trip():
    P = plucker_of_matrix(pinned_matrix())
    C = matrix_of_plucker(P)
    assert plucker_of_matrix(C) == P


def test_plucker_projective_invariance_under_row_ops():
    C = pinned_matrix()
    L = RatMatrix.from_rows([[2, 1], [1, 1]])  # det 1 > 0
    assert plucker_of_matrix(L.matmul(C)) == plucker_of_matrix(C)


def test_gk_test_tnn_pinned():
    rep = gk_test(pinned_matrix(), "tnn", trials=40, seed=1)
    assert isinstance(rep, GKReport)
    assert rep.exact_tnn and not rep.exact_tp
    assert rep.row_space_ok and rep.kernel_ok and rep.consistent


def test_gk_test_tp_vandermonde():
    rep = gk_test(vandermonde_matrix(2, [1, 2, 3, 4]), "tp", trials=40, seed=2)
    assert rep.exact_tp and rep.row_space_ok and rep.kernel_ok and rep.consistent


def test_gk_test_finds_witness_on_negative_minor():
    C = RatMatrix.from_rows([[1, 0, 1], [0, 1, -1]])  # p23 = -1
    rep = gk_test(C, "tnn", trials=200, seed=3)
    assert not rep.exact_tnn
    assert not (rep.row_space_ok and rep.kernel_ok)
    assert rep.witness is not None
    assert rep.consistent


def test_plucker_json_round_trip():
    P = plucker_of_matrix(pinned_matrix())
    assert PluckerVector.from_json(P.to_json()) == P
    assert P.to_json()["coords"]["1,2"] == "1/1"


def test_basis_exchange_holds_for_sampled_matroids_up_to_n8():
    rng = Random(14)
    for (k, n) in [(2, 6), (3, 7), (3, 8)]:
        for _ in range(3):
            while True:
                try:
                    C = random_matrix(k, n, rng, hi=9)
                    M = matroid_of(plucker_of_matrix(C))
                    break
                except ValueError:
                    continue
            assert M.satisfies_basis_exchange()


def test_positroid_catalog_satisfies_basis_exchange():
    from positroid_lab.cells import positroid_catalog

    for bases in positroid_catalog(2, 5):
        M = Matroid(5, 2, bases)
        assert M.satisfies_basis_exchange()
