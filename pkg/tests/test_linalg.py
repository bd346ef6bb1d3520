from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from functorhh.linalg import (
    Field,
    LinalgError,
    kernel,
    kron,
    mat_vec,
    quotient_space,
    rank,
    rref_decompose,
    solve_affine,
    subspace,
)

QQ, GF2 = Field(), Field(2)


def fraction_rank(rows):
    """Plain Gaussian elimination over Fraction, independent of flint."""
    m = [[Fraction(v) for v in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                t = m[i][c] / m[r][c]
                m[i] = [a - t * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def test_rref_proportional_rows():
    r = rref_decompose(QQ, QQ.from_rows([[1, 2], [2, 4]]))
    assert r.rank == 1 and r.kernel.dim == 1 and r.image.dim == 1
    assert r.pivots == (0,)


def test_rref_identity():
    r = rref_decompose(QQ, QQ.identity(3))
    assert r.rank == 3 and r.kernel.dim == 0


def test_rref_gf2_kernel():
    r = rref_decompose(GF2, GF2.from_rows([[1, 1], [1, 1]]))
    assert r.rank == 1
    assert [[int(v) for v in vec] for vec in r.kernel.vectors()] == [[1, 1]]


def test_solve_affine_examples():
    s = solve_affine(QQ, QQ.from_rows([[2]]), [1])
    assert s.particular == [QQ("1/2")]
    assert solve_affine(QQ, QQ.from_rows([[0]]), [1]) is None
    s = solve_affine(QQ, QQ.from_rows([[1, 1]]), [0])
    assert s.particular == [0, 0] and s.kernel.dim == 1


def test_quotient_examples():
    q = quotient_space(QQ, 2, subspace(QQ, 2, [[1, -1]]))
    assert q.dim == 1
    assert q.project([1, -1]) == [0]
    q = quotient_space(QQ, 3, [])
    assert q.projection == QQ.identity(3)
    q = quotient_space(QQ, 2, [[1, 0], [0, 1]])
    assert q.dim == 0


def test_quotient_section_splits_projection():
    q = quotient_space(QQ, 4, [[1, 1, 0, 0], [0, 0, 1, -1]])
    assert q.projection * q.section == QQ.identity(q.dim)


def test_scalar_parsing():
    assert QQ("3/6") == QQ(1) / 2
    assert GF2(3) == GF2(1)
    with pytest.raises(LinalgError):
        QQ(0.5)
    with pytest.raises(LinalgError):
        Field(4)
    assert QQ.format(QQ("-2/4")) == "-1/2"
    assert Field.parse("GF(5)") == Field(5)


def test_kron_matches_definition():
    a = QQ.from_rows([[1, 2], [3, 4]])
    b = QQ.from_rows([[0, 1]])
    k = kron(QQ, a, b)
    assert k.nrows() == 2 and k.ncols() == 4
    assert k.tolist() == [[0, 1, 0, 2], [0, 3, 0, 4]]


small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=5)))
def test_rank_agrees_with_fraction_elimination(rows):
    m = QQ.from_rows(rows)
    assert rank(m) == fraction_rank(rows)
    K = kernel(QQ, m)
    assert K.dim == len(rows[0]) - fraction_rank(rows)
    for v in K.vectors():
        assert all(x == 0 for x in mat_vec(m, v))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_solve_affine_solutions_are_solutions(rows, rhs):
    m = QQ.from_rows(rows)
    rhs = rhs[: len(rows)]
    s = solve_affine(QQ, m, rhs)
    aug = [r + [b] for r, b in zip(rows, rhs)]
    feasible = fraction_rank(aug) == fraction_rank(rows)
    assert (s is not None) == feasible
    if s is not None:
        assert mat_vec(m, s.particular) == [QQ(b) for b in rhs]
