"""
Classical Hochschild cohomology of a finite dimensional algebra, computed
independently of the functor machinery.

Cochains are numpy object arrays of shape ``(d,)*n + (dm,)`` holding exact
scalars, and the differential is the textbook formula written with
``tensordot``.  Only :mod:`functorhh.linalg` is shared with the main
pipeline, for ranks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .linalg import Field, rank


@dataclass
class AlgebraRep:
    """Structure constants ``mult[i, j, k]``: coefficient of ``e_k`` in ``e_i e_j``.

    ``left[i, j, k]`` is the coefficient of ``m_k`` in ``e_i m_j`` and
    ``right[j, i, k]`` the coefficient of ``m_k`` in ``m_j e_i``.  Without an
    explicit bimodule the algebra acts on itself.
    """

    field: Field
    mult: np.ndarray
    unit: list
    left: np.ndarray | None = None
    right: np.ndarray | None = None
    name: str = ""
    _checked: bool = dc_field(default=False, repr=False)

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    @property
    def module_dim(self) -> int:
        return self.dim if self.left is None else self.left.shape[1]

    def actions(self):
        if self.left is None:
            return self.mult, self.mult
        return self.left, self.right

    def violations(self) -> list[str]:
        out = []
        P = self.mult
        u = np.array(self.unit, dtype=object)
        d = self.dim
        if P.shape != (d, d, d) or len(self.unit) != d:
            return ["structure constants have inconsistent shapes"]
        # (e_i e_j) e_k vs e_i (e_j e_k)
        lhs = np.tensordot(P, P, axes=([2], [0]))  # i j k l
        rhs = np.tensordot(P, P, axes=([1], [2]))  # i l j k
        rhs = np.transpose(rhs, (0, 2, 3, 1))
        if not _eq(lhs, rhs):
            out.append("associativity")
        eye = _identity(self.field, d)
        if not _eq(np.tensordot(u, P, axes=([0], [0])), eye):
            out.append("left unit law")
        if not _eq(np.tensordot(u, P, axes=([0], [1])), eye):
            out.append("right unit law")
        if self.left is not None:
            L, R = self.left, self.right
            dm = self.module_dim
            if L.shape != (d, dm, dm) or R.shape != (dm, d, dm):
                return out + ["bimodule tables have inconsistent shapes"]
            eye_m = _identity(self.field, dm)
            # (ab)m = a(bm)
            a = np.tensordot(P, L, axes=([2], [0]))  # i j m k
            b = np.transpose(np.tensordot(L, L, axes=([1], [2])), (0, 2, 3, 1))  # i (j m k)
            if not _eq(a, b):
                out.append("left associativity")
            # m(ab) = (ma)b
            a = np.tensordot(R, P, axes=([1], [2]))  # m k i j -> m i j k
            a = np.transpose(a, (0, 2, 3, 1))
            b = np.tensordot(R, R, axes=([2], [0]))  # m i j k
            if not _eq(a, b):
                out.append("right associativity")
            # (am)b = a(mb)
            a = np.tensordot(L, R, axes=([2], [0]))  # i m j k
            b = np.transpose(np.tensordot(L, R, axes=([1], [2])), (0, 2, 3, 1))
            if not _eq(a, b):
                out.append("bimodule compatibility")
            if not _eq(np.tensordot(u, L, axes=([0], [0])), eye_m):
                out.append("left module unit law")
            if not _eq(np.tensordot(u, R, axes=([0], [1])), eye_m):
                out.append("right module unit law")
        return out


def _identity(field: Field, n: int) -> np.ndarray:
    out = np.full((n, n), field.zero, dtype=object)
    for i in range(n):
        out[i, i] = field.one
    return out


def _eq(a, b) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def _obj_array(field: Field, nested) -> np.ndarray:
    a = np.array(nested, dtype=object)
    flat = [field(v) for v in a.flat]
    out = np.empty(a.shape, dtype=object)
    for i, v in enumerate(flat):
        out.flat[i] = v
    return out


def algebra(field: Field, mult, unit, left=None, right=None, name: str = "") -> AlgebraRep:
    """Build and check an algebra (optionally with a bimodule)."""
    alg = AlgebraRep(field, _obj_array(field, mult), [field(u) for u in unit],
                     None if left is None else _obj_array(field, left),
                     None if right is None else _obj_array(field, right), name)
    bad = alg.violations()
    if bad:
        raise ValueError("algebra axioms failed: " + ", ".join(bad))
    alg._checked = True
    return alg


# ---------------------------------------------------------------------------
# the classical complex


def _coboundary(alg: AlgebraRep, n: int):
    """Matrix of ``b : Hom(A^n, M) -> Hom(A^(n+1), M)`` in the flattened layout."""
    d, dm = alg.dim, alg.module_dim
    f = alg.field
    L, R = alg.actions()
    P = alg.mult
    N = d ** n * dm
    # a batch of all basis cochains: index 0 runs over the basis
    F = np.empty((N,) + (d,) * n + (dm,), dtype=object)
    F.fill(f.zero)
    for t in range(N):
        F.reshape(N, N)[t, t] = f.one
    terms = []
    # a0 . f(a1..an)
    t0 = np.tensordot(F, L, axes=([n + 1], [1]))  # N, a1..an, a0, k
    t0 = np.moveaxis(t0, n + 1, 1)
    terms.append(t0)
    # (-1)^i f(a0, .., a_{i-1} a_i, ..)
    for i in range(1, n + 1):
        ti = np.tensordot(F, P, axes=([i], [2]))  # N, (others), p, q
        # axes: N, a0.. (n-1 remaining slots incl module), then p, q
        ti = np.moveaxis(ti, [n + 1, n + 2], [i, i + 1])
        terms.append(ti * (-1) ** i)
    # (-1)^(n+1) f(a0..a_{n-1}) . a_n
    tl = np.tensordot(F, R, axes=([n + 1], [0]))  # N, a0..a_{n-1}, a_n, k
    terms.append(tl * (-1) ** (n + 1))
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    total = total.reshape(N, d ** (n + 1) * dm)
    return f.matrix(total.shape[1], N, list(total.T.flat))


def classical_differentials(alg: AlgebraRep, max_degree: int) -> list:
    return [_coboundary(alg, n) for n in range(max_degree + 1)]


def classical_hh(alg: AlgebraRep, max_degree: int = 3) -> list[int]:
    """``dim HH^n(A, M)`` for ``n = 0..max_degree``."""
    d, dm = alg.dim, alg.module_dim
    ds = classical_differentials(alg, max_degree)
    ranks = [rank(m) for m in ds]
    return [d ** n * dm - ranks[n] - (ranks[n - 1] if n else 0) for n in range(max_degree + 1)]


# ---------------------------------------------------------------------------
# named and random algebras


def ground_field(field: Field) -> AlgebraRep:
    return algebra(field, [[[1]]], [1], name="k")


def dual_numbers(field: Field) -> AlgebraRep:
    """``k[x]/(x^2)`` on the basis ``1, x``."""
    return algebra(field, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0], name="k[x]/(x^2)")


def group_algebra_c2(field: Field) -> AlgebraRep:
    """``k[C2]`` on the basis ``1, g``."""
    return algebra(field, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], [1, 0], name="k[C2]")


def matrix_algebra(field: Field, n: int = 2) -> AlgebraRep:
    """``M_n(k)`` on matrix units ``e_ij`` in row-major order."""
    d = n * n
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                mult[i * n + j][j * n + k][i * n + k] = 1
    unit = [1 if i % (n + 1) == 0 else 0 for i in range(d)]
    return algebra(field, mult, unit, name=f"M{n}")


def truncated_polynomial(field: Field, poly) -> AlgebraRep:
    """``k[x]/(p)`` for monic ``p`` given by low-to-high coefficients, basis ``x^i``."""
    deg = len(poly) - 1
    if field(poly[-1]) != 1:
        raise ValueError("polynomial must be monic")
    # x^deg = -sum poly[i] x^i
    powers = []
    for e in range(2 * deg - 1):
        if e < deg:
            v = [field.zero] * deg
            v[e] = field.one
        else:
            prev = powers[e - 1]
            v = [field.zero] + prev[:-1]
            top = prev[-1]
            for i in range(deg):
                v[i] -= top * field(poly[i])
        powers.append(v)
    mult = [[powers[i + j] for j in range(deg)] for i in range(deg)]
    unit = [1] + [0] * (deg - 1)
    return algebra(field, mult, unit, name=f"k[x]/({poly})")


_TRIANGULAR = {
    # basis vectors as 2x2 matrices [a, b, c, d] = [[a, b], [0, d]] with c = 0
    "upper": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
    "diagonal": [[1, 0, 0, 0], [0, 0, 0, 1]],
    "dual": [[1, 0, 0, 1], [0, 1, 0, 0]],
    "scalars": [[1, 0, 0, 1]],
}


def triangular_subalgebra(field: Field, kind: str) -> AlgebraRep:
    """Subalgebras of upper triangular 2x2 matrices with a fixed basis."""
    basis = _TRIANGULAR[kind]
    d = len(basis)

    def mul(a, b):
        return [a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]]

    # basis is in echelon form with distinct leading positions
    lead = [next(i for i, v in enumerate(b) if v) for b in basis]

    def coords(v):
        v = [field(x) for x in v]
        out = []
        for b, p in zip(basis, lead):
            c = v[p] / field(b[p])
            out.append(c)
            v = [x - c * field(y) for x, y in zip(v, b)]
        if any(x != 0 for x in v):
            raise ValueError("not closed under multiplication")
        return out

    mult = [[coords(mul(basis[i], basis[j])) for j in range(d)] for i in range(d)]
    unit = coords([1, 0, 0, 1])
    return algebra(field, mult, unit, name=f"T2-{kind}")


def change_basis(alg: AlgebraRep, B) -> AlgebraRep:
    """Same algebra in the basis given by the columns of invertible ``B`` (self-bimodule only)."""
    f = alg.field
    d = alg.dim
    Bm = f.from_rows(B, d)
    Binv = Bm.inv()
    P = alg.mult
    Bn = np.array([[Bm[i, j] for j in range(d)] for i in range(d)], dtype=object)
    Bi = np.array([[Binv[i, j] for j in range(d)] for i in range(d)], dtype=object)
    # e'_i e'_j = sum B[a,i] B[b,j] P[a,b,c] e_c, then e_c = sum Binv[k,c] e'_k
    t = np.tensordot(Bn, P, axes=([0], [0]))  # i, b, c
    t = np.tensordot(t, Bn, axes=([1], [0]))  # i, c, j
    t = np.tensordot(t, Bi, axes=([1], [1]))  # i, j, k
    unit = list(np.tensordot(Bi, np.array(alg.unit, dtype=object), axes=([1], [0])))
    return algebra(f, t.tolist(), unit, name=f"{alg.name}'")


def random_algebra(seed: int, field: Field | None = None, max_dim: int = 3) -> AlgebraRep:
    """A seed-determined associative algebra of dimension at most ``max_dim``.

    Either ``k[x]/(p)`` for a random monic ``p`` or a subalgebra of upper
    triangular matrices, then written in a random basis.
    """
    rng = random.Random(seed)
    f = field or Field.rationals()
    if rng.random() < 0.5:
        # product of linear factors; each root repeats an earlier one half the time
        deg = rng.randint(2, max(2, max_dim))
        poly = [f.one]
        roots = []
        for _ in range(deg):
            r = rng.choice(roots) if roots and rng.random() < 0.5 else f(rng.randint(-1, 1))
            roots.append(r)
            poly = [(poly[i - 1] if i else f.zero) - r * (poly[i] if i < len(poly) else f.zero)
                    for i in range(len(poly) + 1)]
        alg = truncated_polynomial(f, poly)
    else:
        kinds = [k for k, b in _TRIANGULAR.items() if 2 <= len(b) <= max_dim]
        alg = triangular_subalgebra(f, rng.choice(kinds))
    d = alg.dim
    while True:
        B = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
        if rank(f.from_rows(B, d)) == d:
            break
    out = change_basis(alg, B)
    out.name = f"random[{seed}]"
    return out


# ---------------------------------------------------------------------------
# bridge to the functor pipeline


def lift_algebra(alg: AlgebraRep, category=None):
    """The algebra and its bimodule as a monoid and bimodule on the one-object category."""
    from .fixtures import trivial_category
    from .functors import LinearFunctor
    from .monoids import Bimodule, Monoid, regular_bimodule, validate_bimodule, validate_monoid

    f = alg.field
    cat = category or trivial_category(f)
    (o,) = cat.objects
    d, dm = alg.dim, alg.module_dim
    A = LinearFunctor(cat, {o: d}, {}, alg.name)
    A = validate_monoid(A, {(o, o): alg.mult.tolist()}, alg.unit, alg.name)
    if alg.left is None:
        return A, regular_bimodule(A)
    M = LinearFunctor(cat, {o: dm}, {}, "M")
    M = validate_bimodule(A, M, {(o, o): alg.left.tolist()},
                          {(o, o): alg.right.tolist()}, "M")
    return A, M


def lower_monoid(A, M=None) -> AlgebraRep:
    """Inverse of :func:`lift_algebra` on a one-object category."""
    from .monoids import table_to_nested

    cat = A.category
    (o,) = cat.objects
    f = A.field
    d = A.dim(o)
    mult = table_to_nested(f, A.product[(o, o)], d, d)
    if M is None or (M.functor is A.functor and M.left[(o, o)] == A.product[(o, o)]
                     and M.right[(o, o)] == A.product[(o, o)]):
        return algebra(f, mult, A.unit, name=A.name)
    dm = M.dim(o)
    left = table_to_nested(f, M.left[(o, o)], d, dm)
    right = table_to_nested(f, M.right[(o, o)], dm, d)
    return algebra(f, mult, A.unit, left, right, name=A.name)


@dataclass
class CrosscheckVerdict:
    ok: bool
    classical: list
    engine: list
    first_divergence: int | None

    def __str__(self):
        if self.ok:
            return f"match {self.classical}"
        return (f"mismatch at degree {self.first_divergence}: classical {self.classical}, "
                f"engine {self.engine}")


def crosscheck(alg: AlgebraRep, max_degree: int = 3) -> CrosscheckVerdict:
    """Compare :func:`classical_hh` with the functor pipeline on the lift."""
    from .hochschild import cochain_space, hh_compute

    A, M = lift_algebra(alg)
    (o,) = A.category.objects
    for n in range(max_degree + 2):
        got = cochain_space(A, M, n, o).dim
        want = alg.dim ** n * alg.module_dim
        if got != want:
            raise AssertionError(f"cochain space in degree {n} has dim {got}, expected {want}")
    classical = classical_hh(alg, max_degree)
    engine = hh_compute(A, M, max_degree).dims[o]
    first = next((n for n, (a, b) in enumerate(zip(classical, engine)) if a != b), None)
    return CrosscheckVerdict(first is None, classical, list(engine), first)
