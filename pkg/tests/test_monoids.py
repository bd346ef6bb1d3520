import pytest

from conftest import all_monoid_fixtures
from functorhh import fixtures as fx
from functorhh.category import ValidationError
from functorhh.functors import hom_functors, validate_functor, zero_functor
from functorhh.linalg import Field
from functorhh.monoids import (
    direct_sum_bimodule,
    direct_sum_inclusions,
    hom_over_monoid,
    opposite_monoid,
    regular_bimodule,
    unit_monoid,
    validate_bimodule,
    validate_monoid,
    zero_bimodule,
)

QQ = Field()


def test_fixture_monoids_are_valid():
    for label, A in all_monoid_fixtures():
        assert A.violations() == [], label


def test_commutativity_verdicts(dual, m2):
    assert dual.is_commutative()
    assert not m2.is_commutative()


def test_broken_unit_law():
    F = fx.dual_numbers_monoid().functor
    mult = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    with pytest.raises(ValidationError) as exc:
        validate_monoid(F, {("1", "1"): mult}, [0, 1])
    assert any(v.axiom == "unit law" for v in exc.value.violations)


def test_opposite_of_commutative_is_same(dual):
    op = opposite_monoid(dual)
    assert op.product == dual.product


def test_opposite_of_matrices_is_transposed(m2):
    op = opposite_monoid(m2)
    # e_i *op e_j = e_j e_i
    for i in range(4):
        for j in range(4):
            assert op.multiply("1", "1", m2.basis_vector("1", i), m2.basis_vector("1", j)) == \
                m2.multiply("1", "1", m2.basis_vector("1", j), m2.basis_vector("1", i))


def test_opposite_of_super_graded_picks_up_sign(graded_super):
    op = opposite_monoid(graded_super)
    assert op.product[("g", "g")].tolist() == [[-1]]
    for k in [("e", "e"), ("e", "g"), ("g", "e")]:
        assert op.product[k].tolist() == [[1]]
    assert op.violations() == []


def test_standard_bimodules(dual, graded_super):
    for A in (dual, graded_super):
        assert regular_bimodule(A).violations() == []
        assert zero_bimodule(A).violations() == []
        assert direct_sum_bimodule(regular_bimodule(A), regular_bimodule(A)).violations() == []


def test_wrong_action_is_rejected(dual):
    F = dual.functor
    left = {("1", "1"): [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]}
    with pytest.raises(ValidationError):
        validate_bimodule(dual, F, left, None)


def test_direct_sum_inclusions_are_morphisms(dual):
    R = regular_bimodule(dual)
    S, inj, proj = direct_sum_inclusions(R, R)
    assert inj.violations() == [] and proj.violations() == []


def test_yoneda_for_modules():
    for label, A in all_monoid_fixtures():
        R = regular_bimodule(A)
        mods = [R, direct_sum_bimodule(R, R)]
        for M in mods:
            for x in A.category.objects:
                assert hom_over_monoid(A, R, M, x).dim == M.dim(x), (label, x)


def test_unit_monoid_modules_are_functors():
    for cat in (fx.c2_category(), fx.c2_category(super_sign=True), fx.group_algebra_category()):
        I = unit_monoid(cat)
        for F in fx.sample_functors(cat):
            M = fx.unit_bimodule(I, F)
            assert hom_over_monoid(I, M, M, cat.unit).dim == hom_functors(F, F).dim


def test_zero_functor_bimodule(dual):
    M = validate_bimodule(dual, zero_functor(dual.category), {}, {})
    assert M.dim("1") == 0
