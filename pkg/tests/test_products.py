import random

import pytest

from conftest import GF2, random_cochain
from functorhh import fixtures as fx
from functorhh.hochschild import Cochain, HochschildComplex, cohomology_group, commutant
from functorhh.linalg import kernel, kron
from functorhh.products import bracket_deg1, cup_on_classes, cup_product, is_derivation, is_inner

BIDEGREES = [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]


def leibniz_defect(f, g, cup=cup_product):
    lhs = cup(f, g).beta()
    rhs = cup(f.beta(), g) + cup(f, g.beta()).scale((-1) ** f.degree)
    return lhs - rhs


def untwisted_cup(f, g):
    """The cup product with the symmetry twist left out."""
    hc = g.complex
    cat, fld = hc.category, hc.field
    z = cat.tensor_obj(f.at, g.at)
    sp = hc.space(f.degree + g.degree, z)
    ff, gg = f.space.decode(f.vector), g.space.decode(g.vector)
    blocks = {}
    for Z in sp.layout.tuples:
        X, Y = Z[: f.degree], Z[f.degree:]
        L = hc.M.left[(cat.tensor_obj(cat.tensor_objs(*X), f.at), cat.tensor_obj(cat.tensor_objs(*Y), g.at))]
        blocks[Z] = L * kron(fld, ff[X], gg[Y])
    return Cochain(hc, f.degree + g.degree, z, sp.encode(blocks))


@pytest.mark.parametrize("name", ["dual", "graded-super", "graded", "xk"])
def test_leibniz(name):
    A = {"dual": fx.dual_numbers_monoid, "graded-super": lambda: fx.graded_monoid(None, True),
         "graded": fx.graded_monoid, "xk": fx.group_algebra_dual_numbers}[name]()
    hc = HochschildComplex(A)
    seed = 0
    for i, j in BIDEGREES:
        if name == "xk" and i + j > 2:
            continue
        for x in A.category.objects:
            for y in A.category.objects:
                seed += 1
                f, g = random_cochain(hc, i, x, seed), random_cochain(hc, j, y, 1000 + seed)
                assert leibniz_defect(f, g).is_zero(), (i, j, x, y)


def test_leibniz_needs_the_twist(graded_super):
    hc = HochschildComplex(graded_super)
    broken = 0
    for seed in range(5):
        f, g = random_cochain(hc, 1, "g", seed), random_cochain(hc, 1, "g", 50 + seed)
        if not leibniz_defect(f, g, untwisted_cup).is_zero():
            broken += 1
    assert broken > 0


def test_super_cup_matches_hand_signs(graded_super):
    hc = HochschildComplex(graded_super)
    cat = graded_super.category
    sign = {("g", "g"): -1}
    f, g = random_cochain(hc, 1, "g", 1), random_cochain(hc, 1, "g", 2)
    p = cup_product(f, g)
    for Z in p.space.layout.tuples:
        oY = cat.tensor_objs(*Z[1:])
        want = sign.get(("g", oY), 1) * f.block(Z[:1])[0, 0] * g.block(Z[1:])[0, 0]
        assert p.block(Z)[0, 0] == want


def test_unit_is_two_sided(dual, graded_super):
    for A in (dual, graded_super):
        hc = HochschildComplex(A)
        one = A.category.unit
        eps = hc.cochain(0, one, A.unit)
        for n in range(3):
            for x in A.category.objects:
                f = random_cochain(hc, n, x, 10 * n)
                assert cup_product(eps, f) == f
                assert cup_product(f, eps) == f


def test_cup_associative_on_representatives(dual, graded_super):
    for A in (dual, graded_super, fx.dual_numbers_monoid(GF2)):
        hc = HochschildComplex(A)
        objs = A.category.objects
        reps = []
        for n in range(3):
            for x in objs:
                reps += [hc.cochain_from_coordinates(n, x, r) for r in cohomology_group(hc, n, x).representatives]
        reps = [r for r in reps if r.degree <= 1] + [random_cochain(hc, 1, objs[-1], 5)]
        for a in reps:
            for b in reps:
                for c in reps:
                    if a.degree + b.degree + c.degree > 3:
                        continue
                    assert cup_product(cup_product(a, b), c) == cup_product(a, cup_product(b, c))


def test_cup_square_in_characteristic_two():
    A = fx.dual_numbers_monoid(GF2)
    hc = HochschildComplex(A)
    H2 = cohomology_group(hc, 2, "1")
    squares = []
    for r in cohomology_group(hc, 1, "1").representatives:
        u = hc.cochain_from_coordinates(1, "1", r)
        squares.append(H2.coordinates(cup_product(u, u).coordinates()))
    assert any(any(v != 0 for v in s) for s in squares)


def test_commutant_acts_on_classes(dual, graded_super):
    for A in (dual, graded_super):
        hc = HochschildComplex(A)
        for x in A.category.objects:
            for c in commutant(A, None, x).vectors():
                cz = hc.cochain(0, x, c)
                for y in A.category.objects:
                    for n in (1, 2):
                        g = random_cochain(hc, n - 1, y, 3)
                        # coboundaries go to coboundaries
                        assert cup_product(cz, g.beta()) == cup_product(cz, g).beta()
                        for r in cohomology_group(hc, n, y).representatives:
                            assert cup_product(cz, hc.cochain_from_coordinates(n, y, r)).is_cocycle()


def test_cup_on_classes_dual(dual):
    hc = HochschildComplex(dual)
    table = cup_on_classes(hc, 0, "1", 1, "1")
    assert len(table) == 2 and len(table[0]) == 1


def test_bracket_basics(dual):
    hc = HochschildComplex(dual)
    u = hc.cochain_from_coordinates(1, "1", cohomology_group(hc, 1, "1").representatives[0])
    assert bracket_deg1(u, u).is_zero()
    for seed in range(4):
        d = random_cochain(hc, 1, "1", seed)
        assert bracket_deg1(d, d).is_zero()


def random_derivation(hc, x, seed):
    rng = random.Random(seed)
    basis = kernel(hc.field, hc.differential(1, x)).vectors()
    coords = [0] * hc.space(1, x).dim
    for v in basis:
        c = rng.randint(-2, 2)
        coords = [a + c * b for a, b in zip(coords, v)]
    return hc.cochain_from_coordinates(1, x, coords)


def test_bracket_is_well_defined_up_to_inner():
    for A in (fx.dual_numbers_monoid(), fx.matrix_monoid(), fx.graded_monoid(None, True)):
        hc = HochschildComplex(A)
        objs = A.category.objects
        for seed in range(3):
            for x in objs:
                for x2 in objs:
                    d, d2 = random_derivation(hc, x, seed), random_derivation(hc, x2, 100 + seed)
                    m = random_cochain(hc, 0, x, seed)
                    assert is_derivation(bracket_deg1(d, d2))
                    assert is_inner(bracket_deg1(d + m.beta(), d2) - bracket_deg1(d, d2))
                    assert is_inner(bracket_deg1(m.beta(), d2))


def test_bracket_of_dual_generators_lands_in_derivations():
    A = fx.dual_numbers_monoid()
    hc = HochschildComplex(A)
    ders = [hc.cochain_from_coordinates(1, "1", v) for v in kernel(A.field, hc.differential(1, "1")).vectors()]
    for d in ders:
        for e in ders:
            assert is_derivation(bracket_deg1(d, e))
