from functorhh import fixtures as fx
from functorhh.day import (
    DayCache,
    check_witness,
    day_biaction,
    day_mu,
    day_value,
    separability_witness,
    transport_separability,
)
from functorhh.linalg import Field, is_zero, rank
from functorhh.monoids import unit_monoid, validate_monoid_morphism

QQ = Field()


def test_day_dims():
    assert day_value(unit_monoid(fx.trivial_category()), "1").dim == 1
    assert day_value(fx.dual_numbers_monoid(), "1").dim == 4
    assert day_value(fx.graded_monoid(), "e").dim == 2
    assert day_value(fx.group_algebra_dual_numbers(), "1").dim == 8


def test_mu_ranks():
    assert rank(day_mu(unit_monoid(fx.trivial_category()), "1")) == 1
    assert rank(day_mu(fx.dual_numbers_monoid(), "1")) == 2
    assert rank(day_mu(fx.matrix_monoid(), "1")) == 4


def test_unit_acts_trivially(dual):
    L = day_biaction(dual, "left", dual.unit, "1", "1")
    R = day_biaction(dual, "right", dual.unit, "1", "1")
    assert L == QQ.identity(4) and R == QQ.identity(4)


def test_nilpotent_action_squares_to_zero(dual):
    L = day_biaction(dual, "left", [0, 1], "1", "1")
    assert is_zero(L * L) and not is_zero(L)


def test_super_graded_action_moves_components(graded_super):
    c = DayCache(graded_super)
    gens_e, gens_g = c["e"].generators, c["g"].generators
    L = day_biaction(graded_super, "left", [1], "g", "e", c)
    col = [L[i, 0] for i in range(L.nrows())]
    # the (e,e) generator goes to the (g,e) generator
    assert gens_e[0][:2] == ("e", "e")
    target = [k for k, g in enumerate(gens_g) if g[:2] == ("g", "e")]
    assert col == [1 if k in target else 0 for k in range(len(gens_g))]


def test_witnesses():
    I = unit_monoid(fx.trivial_category())
    assert separability_witness(I).xi == [1]
    w = separability_witness(fx.matrix_monoid())
    assert w is not None
    assert separability_witness(fx.dual_numbers_monoid()) is None
    w = separability_witness(fx.group_algebra_monoid())
    assert w.xi == [QQ(1) / 2, 0, 0, QQ(1) / 2]


def test_classical_matrix_idempotent_is_a_witness(m2):
    dv = day_value(m2, "1")
    # sum_i e_i1 (x) e_1i with matrix units e11=0, e12=1, e21=2, e22=3
    xi = [0] * dv.dim
    for a, b in ((0, 0), (2, 1)):
        cls = dv.class_of("1", "1", m2.category.identity("1"), m2.basis_vector("1", a), m2.basis_vector("1", b))
        xi = [u + v for u, v in zip(xi, cls)]
    assert check_witness(m2, xi) == []
    assert check_witness(m2, [0] * dv.dim) != []


def test_sections_split_mu():
    for A in (fx.matrix_monoid(), fx.graded_monoid(None, True), unit_monoid(fx.c2_category())):
        c = DayCache(A)
        w = separability_witness(A, c)
        for x, t in w.sections.items():
            if A.dim(x):
                assert day_mu(A, x, c) * t == QQ.identity(A.dim(x))


def test_transport_along_identity(m2):
    w = separability_witness(m2)
    phi = validate_monoid_morphism(m2, m2, {"1": QQ.identity(4)})
    assert transport_separability(phi, w.xi) == w.xi


def test_transport_along_augmentation():
    B = fx.group_algebra_monoid()
    k = fx.ground_monoid()
    phi = validate_monoid_morphism(B, k, {"1": QQ.from_rows([[1, 1]])})
    xi = transport_separability(phi, separability_witness(B).xi)
    assert xi == [1]
    assert check_witness(k, xi) == []
