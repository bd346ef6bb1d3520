from functorhh.complexes import (
    ComplexSES,
    cohomology_dims,
    cohomology_of_complex,
    direct_sum_ses,
    euler_characteristic,
    les_of_complex_ses,
    make_complex,
)
from functorhh.linalg import Field

QQ = Field()


def test_identity_differential_is_acyclic():
    c = make_complex(QQ, [QQ.identity(1), QQ.zeros(0, 1)])
    assert cohomology_dims(c) == [0, 0]


def test_zero_differential_keeps_everything():
    c = make_complex(QQ, [QQ.zeros(1, 1), QQ.zeros(0, 1)])
    assert cohomology_dims(c) == [1, 1]


def test_last_degree_needs_an_outgoing_map():
    # cohomology stops at the last degree that has a differential
    c = make_complex(QQ, [QQ.zeros(1, 1)])
    assert cohomology_dims(c) == [1]


def test_coordinates_kill_coboundaries():
    # Q --(1,1)^T--> Q^2 --[1,-1]--> Q
    c = make_complex(QQ, [QQ.from_rows([[1], [1]]), QQ.from_rows([[1, -1]]), QQ.zeros(0, 1)])
    H = cohomology_of_complex(c)
    assert [g.dim for g in H] == [0, 0, 0]
    c = make_complex(QQ, [QQ.zeros(2, 1), QQ.from_rows([[1, -1]]), QQ.zeros(0, 1)])
    H1 = cohomology_of_complex(c)[1]
    assert H1.dim == 1
    assert H1.coordinates([1, 1]) != [0]


def test_non_complex_is_rejected():
    import pytest

    from functorhh.complexes import ComplexError

    with pytest.raises(ComplexError):
        make_complex(QQ, [QQ.identity(1), QQ.identity(1)])


def test_les_of_zero_complexes():
    z = make_complex(QQ, [QQ.zeros(0, 0)] * 3)
    r = les_of_complex_ses(direct_sum_ses(z, z), 1)
    assert r.exact
    assert all(m.nrows() * m.ncols() == 0 for m in r.connecting)


def test_les_split_sum_is_additive():
    K = make_complex(QQ, [QQ.zeros(1, 1), QQ.from_rows([[1]]), QQ.zeros(0, 1)])
    N = make_complex(QQ, [QQ.from_rows([[1], [0]]), QQ.zeros(1, 2), QQ.zeros(1, 1)])
    s = direct_sum_ses(K, N)
    assert isinstance(s, ComplexSES) and not s.violations()
    r = les_of_complex_ses(s, 1)
    assert r.exact
    for n in range(2):
        assert r.dims_M[n] == r.dims_K[n] + r.dims_N[n]
    for d in r.connecting:
        assert all(v == 0 for row in d.tolist() for v in row)


def test_euler_characteristic():
    assert euler_characteristic([2, 1, 1, 1]) == 1
