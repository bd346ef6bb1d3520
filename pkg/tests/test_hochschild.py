import pytest

from conftest import GF2, QQ, all_monoid_fixtures, random_cochain
from functorhh import fixtures as fx
from functorhh.hochschild import (
    Cochain,
    HochschildComplex,
    cochain_space,
    cohomology_group,
    commutant,
    derivation_spaces,
    hh_compute,
    hh_translate,
    hochschild_differential,
    is_coboundary,
)
from functorhh.linalg import is_zero
from functorhh.monoids import regular_bimodule, unit_monoid


def test_cochain_dims_dual(dual):
    assert [cochain_space(dual, None, n, "1").dim for n in range(4)] == [2, 4, 8, 16]


def test_degree_zero_is_the_module():
    for label, A in all_monoid_fixtures():
        for x in A.category.objects:
            assert cochain_space(A, None, 0, x).dim == A.dim(x), label


def test_graded_degree_one_at_e(graded):
    assert cochain_space(graded, None, 1, "e").dim == 2


def test_alternating_sum_of_faces(dual, graded_super):
    for A in (dual, graded_super):
        hc = HochschildComplex(A)
        for x in A.category.objects:
            for n in range(3):
                total = hc.face_map_dual(n, 1, x)
                for k in range(2, n + 3):
                    total += (-1) ** (k + 1) * hc.face_map_dual(n, k, x)
                assert total == hc.differential(n, x)


def test_presimplicial_identities():
    for A in (fx.dual_numbers_monoid(), fx.graded_monoid(None, True), fx.group_algebra_dual_numbers()):
        hc = HochschildComplex(A)
        for x in A.category.objects:
            for n in range(3):
                for i in range(1, n + 3):
                    for j in range(i + 1, n + 4):
                        lhs = hc.face_map_dual(n + 1, j, x) * hc.face_map_dual(n, i, x)
                        rhs = hc.face_map_dual(n + 1, i, x) * hc.face_map_dual(n, j - 1, x)
                        assert lhs == rhs, (n, i, j, x)


def test_inner_face_evaluates_on_products(dual):
    hc = HochschildComplex(dual)
    f = random_cochain(hc, 2, "1", 7)
    face = hc.face_ambient(2, 2, "1")
    from functorhh.linalg import mat_vec

    g = Cochain(hc, 3, "1", mat_vec(face, f.vector))
    X = ("1", "1", "1")
    # basis 0 = 1, 1 = x: (d f)(1, x, x) = f(x, x) and (d f)(x, x, 1) = f(x^2, 1) = 0
    assert g.evaluate(X, [0, 1, 1]) == f.evaluate(("1", "1"), [1, 1])
    assert all(v == 0 for v in g.evaluate(X, [1, 1, 0]))
    with pytest.raises(IndexError):
        hc.face_ambient(2, 5, "1")


def test_beta_kills_commutant(dual, graded_super):
    for A in (dual, graded_super):
        hc = HochschildComplex(A)
        for x in A.category.objects:
            for v in commutant(A, None, x).vectors():
                assert hc.cochain(0, x, v).beta().is_zero()


def test_beta0_vanishes_for_commutative_dual(dual):
    assert is_zero(hochschild_differential(dual, None, 0, "1"))
    assert commutant(dual, None, "1").dim == 2


def test_super_sign_enters_beta0(graded_super, graded):
    # beta(m)(t) = t m - A(s_{g,g}) m t, which is 2 t m with the sign and 0 without
    b = hochschild_differential(graded_super, None, 0, "g")
    hc = HochschildComplex(graded_super)
    c = hc.cochain(0, "g", [1]).beta()
    assert c.evaluate(("g",), [0]) == [2]
    assert not is_zero(b)
    assert is_zero(hochschild_differential(graded, None, 0, "g"))


def test_commutants():
    assert commutant(fx.matrix_monoid(), None, "1").dim == 1
    assert commutant(fx.graded_monoid(None, True), None, "g").dim == 0
    assert commutant(fx.graded_monoid(None, True), None, "e").dim == 1


def test_derivations(dual, m2):
    assert derivation_spaces(dual, None, "1").dims == (1, 0, 1)
    der, inn, hh1 = derivation_spaces(m2, None, "1").dims
    assert der == inn and hh1 == 0
    for cat in (fx.c2_category(), fx.c2_category(super_sign=True)):
        I = unit_monoid(cat)
        for F in fx.sample_functors(cat):
            M = fx.unit_bimodule(I, F)
            for x in cat.objects:
                r = derivation_spaces(I, M, x)
                assert r.hh1 == 0


def test_hh_dims_small_fixtures(dual, m2):
    assert hh_compute(dual, None, 3).dims["1"] == [2, 1, 1, 1]
    assert hh_compute(fx.dual_numbers_monoid(GF2), None, 3).dims["1"] == [2, 2, 2, 2]
    assert hh_compute(m2, None, 3).dims["1"] == [1, 0, 0, 0]


def test_hh_on_xk_fixture():
    A = fx.group_algebra_dual_numbers()
    rep = hh_compute(A, None, 2)
    assert rep.dims["1"] == [4, 2, 2]
    assert rep.cochain_dims["1"][:3] == [4, 8, 16]


def test_translate_identity_and_round_trip(graded):
    hc = HochschildComplex(graded)
    cat = graded.category
    for n in range(2):
        for x in cat.objects:
            H = cohomology_group(hc, n, x)
            T = hh_translate(graded, None, n, cat.identity(x), hc)
            assert T == QQ.identity(H.dim)
    dual = fx.dual_numbers_monoid()
    hd = HochschildComplex(dual)
    T = hh_translate(dual, None, 1, dual.category.identity("1").scale(3), hd)
    assert T == QQ.identity(1) * 3


def test_coboundaries_are_detected(dual):
    hc = HochschildComplex(dual)
    g = random_cochain(hc, 1, "1", 3)
    c = g.beta()
    pre = is_coboundary(hc, c)
    assert pre is not None and pre.beta() == c
    rep = cohomology_group(hc, 2, "1").representatives[0]
    assert is_coboundary(hc, hc.cochain_from_coordinates(2, "1", rep)) is None


def test_regular_bimodule_is_default(dual):
    a = hh_compute(dual, regular_bimodule(dual), 2).dims
    b = hh_compute(dual, None, 2).dims
    assert a == b
