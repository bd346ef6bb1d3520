import pytest

from functorhh import fixtures as fx
from functorhh.functors import constant_functor, yoneda_functor
from functorhh.linalg import Field
from functorhh.multilinear import MultilinearSpace, mixed_radix, solve_multilinear_natural, unmix

QQ = Field()


def test_mixed_radix_round_trip():
    rad = (2, 3, 4)
    seen = set()
    for c in range(24):
        idx = unmix(c, rad)
        assert mixed_radix(idx, rad) == c
        seen.add(tuple(idx))
    assert len(seen) == 24
    assert mixed_radix([1, 0, 0], rad) == 12  # first slot most significant


def test_unit_source_on_x1():
    cat = fx.trivial_category()
    F = fx.sample_functors(cat)[1]
    sp = solve_multilinear_natural([yoneda_functor(cat, "1")], F)
    assert sp.dim == F.dims["1"]


def test_dual_numbers_endomorphisms():
    A = fx.dual_numbers_monoid().functor
    assert solve_multilinear_natural([A], A).dim == 4


def test_bilinear_on_xc2():
    cat = fx.c2_category()
    F = constant_functor(cat, {"e": 1, "g": 1})
    sp = solve_multilinear_natural([F, F], F)
    assert sp.dim == 4
    assert sp.layout.tuples == [("e", "e"), ("e", "g"), ("g", "e"), ("g", "g")]


def test_naturality_cuts_down_on_xk():
    # bilinear maps k[C2] x k[C2] -> k[C2] natural for t<>t = t acting diagonally
    cat = fx.group_algebra_category()
    Y = yoneda_functor(cat, "1")
    sp = solve_multilinear_natural([Y, Y], Y)
    assert 0 < sp.dim < sp.ambient
    for fam in sp.families():
        assert sp.contains(fam.vector())


def test_encode_decode_round_trip():
    cat = fx.c2_category()
    F = constant_functor(cat, {"e": 2, "g": 1})
    sp = MultilinearSpace([F, F], F)
    vec = [QQ(i) for i in range(sp.ambient)]
    fam = sp.decode(vec)
    assert sp.encode({X: fam[X] for X in sp.layout.tuples}) == vec
    # block (e,g): rows F(g) = 1, columns 2*1
    assert sp.layout.shape(("e", "g")) == (1, 2)


def test_arity_zero_is_rejected_by_solver():
    cat = fx.trivial_category()
    with pytest.raises(ValueError):
        solve_multilinear_natural([], yoneda_functor(cat, "1"))
