"""
Exact dense linear algebra over the rationals and prime fields.

Matrices are python-flint ``fmpq_mat`` / ``nmod_mat`` objects and scalars are
``fmpq`` / ``nmod``.  Elimination is delegated to flint's reduced row echelon
form, which is unique, so every basis produced here is canonical: the same
input always yields the same pivots and the same vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import flint


class LinalgError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


class Field:
    """The rationals (``Field()``) or GF(p) (``Field(p)``)."""

    def __init__(self, characteristic: int = 0):
        if characteristic and not _is_prime(characteristic):
            raise LinalgError(f"characteristic {characteristic} is not prime")
        self.characteristic = int(characteristic)
        if self.characteristic:
            self.zero = flint.nmod(0, self.characteristic)
            self.one = flint.nmod(1, self.characteristic)
        else:
            self.zero = flint.fmpq(0)
            self.one = flint.fmpq(1)

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accept ``"Q"``, ``"QQ"``, ``"GF(p)"`` or ``"GF p"``."""
        t = str(text).strip().replace(" ", "")
        if t.upper() in ("Q", "QQ", "RATIONALS"):
            return cls(0)
        up = t.upper()
        if up.startswith("GF(") and up.endswith(")"):
            return cls(int(t[3:-1]))
        if up.startswith("GF"):
            return cls(int(t[2:]))
        raise LinalgError(f"unknown field {text!r}")

    @property
    def kind(self) -> str:
        return "prime-field" if self.characteristic else "rationals"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "GF(%d)" % self.characteristic if self.characteristic else "Q"

    def __str__(self):
        return repr(self)

    # scalars ---------------------------------------------------------------

    def __call__(self, value):
        p = self.characteristic
        if p:
            if isinstance(value, flint.nmod):
                if value.modulus() != p:
                    raise LinalgError("scalar from a different prime field")
                return value
            if isinstance(value, str):
                value = Fraction(value)
            if isinstance(value, flint.fmpq):
                value = Fraction(int(value.p), int(value.q))
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise LinalgError(f"{value} has no image in GF({p})")
                return flint.nmod(value.numerator, p) / flint.nmod(value.denominator, p)
            return flint.nmod(int(value), p)
        if isinstance(value, flint.fmpq):
            return value
        if isinstance(value, flint.nmod):
            raise LinalgError("prime-field scalar used over Q")
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            return flint.fmpq(value.numerator, value.denominator)
        if isinstance(value, float):
            raise LinalgError("floating-point scalars are not accepted")
        return flint.fmpq(int(value))

    def to_python(self, x):
        """Fraction over Q, int in [0, p) over GF(p)."""
        if self.characteristic:
            return int(x)
        return Fraction(int(x.p), int(x.q))

    def format(self, x):
        """JSON-ready scalar: bare int when integral, else ``"p/q"``."""
        if self.characteristic:
            return int(x)
        if int(x.q) == 1:
            return int(x.p)
        return "%d/%d" % (int(x.p), int(x.q))

    # matrices --------------------------------------------------------------

    def matrix(self, rows: int, cols: int, entries: Sequence | None = None):
        p = self.characteristic
        if entries is None:
            if p:
                return flint.nmod_mat(rows, cols, p)
            return flint.fmpq_mat(rows, cols)
        entries = list(entries)
        if len(entries) != rows * cols:
            raise LinalgError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        if rows == 0 or cols == 0:
            return self.matrix(rows, cols)
        if p:
            return flint.nmod_mat(rows, cols, [self(e) for e in entries], p)
        return flint.fmpq_mat(rows, cols, [self(e) for e in entries])

    def from_rows(self, rows: Sequence[Sequence], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise LinalgError("ragged rows")
        return self.matrix(len(rows), cols, [e for r in rows for e in r])

    def from_columns(self, columns: Sequence[Sequence], rows: int):
        m = self.from_rows(columns, rows)
        return m.transpose()

    def from_sparse(self, rows: int, cols: int, entries: dict):
        """Build from ``{(i, j): scalar}``; zero elsewhere."""
        flat = [self.zero] * (rows * cols)
        for (i, j), v in entries.items():
            flat[i * cols + j] = v
        return self.matrix(rows, cols, flat)

    def zeros(self, rows: int, cols: int):
        return self.matrix(rows, cols)

    def identity(self, n: int):
        m = self.matrix(n, n)
        for i in range(n):
            m[i, i] = self.one
        return m

    def column(self, vec: Sequence):
        return self.matrix(len(vec), 1, vec)

    def vector(self, entries: Iterable) -> list:
        return [self(e) for e in entries]


def rows_of(m) -> list[list]:
    return m.tolist() if m.nrows() and m.ncols() else [[] for _ in range(m.nrows())]


def column_of(m, j: int) -> list:
    return [m[i, j] for i in range(m.nrows())]


def row_of(m, i: int) -> list:
    return [m[i, j] for j in range(m.ncols())]


def is_zero(m) -> bool:
    return all(e == 0 for e in m.entries())


def zero_of(m):
    if isinstance(m, flint.nmod_mat):
        return flint.nmod(0, m.modulus())
    return flint.fmpq(0)


def mat_vec(m, v: Sequence) -> list:
    """Matrix times a python list, returned as a list."""
    rows, cols = m.nrows(), m.ncols()
    if len(v) != cols:
        raise LinalgError(f"vector of length {len(v)} against {cols} columns")
    zero = zero_of(m)
    out = []
    for i in range(rows):
        s = zero
        for j in range(cols):
            a = m[i, j]
            if a != 0 and v[j] != 0:
                s = s + a * v[j]
        out.append(s)
    return out


def hstack(field: Field, blocks: Sequence, rows: int | None = None):
    if rows is None:
        rows = blocks[0].nrows() if blocks else 0
    cols = sum(b.ncols() for b in blocks)
    out = field.zeros(rows, cols)
    c0 = 0
    for b in blocks:
        if b.nrows() != rows:
            raise LinalgError("hstack row mismatch")
        for i in range(rows):
            for j in range(b.ncols()):
                e = b[i, j]
                if e != 0:
                    out[i, c0 + j] = e
        c0 += b.ncols()
    return out


def vstack(field: Field, blocks: Sequence, cols: int | None = None):
    if cols is None:
        cols = blocks[0].ncols() if blocks else 0
    rows = sum(b.nrows() for b in blocks)
    out = field.zeros(rows, cols)
    r0 = 0
    for b in blocks:
        if b.ncols() != cols:
            raise LinalgError("vstack column mismatch")
        for i in range(b.nrows()):
            for j in range(cols):
                e = b[i, j]
                if e != 0:
                    out[r0 + i, j] = e
        r0 += b.nrows()
    return out


def block_diag(field: Field, blocks: Sequence):
    rows = sum(b.nrows() for b in blocks)
    cols = sum(b.ncols() for b in blocks)
    out = field.zeros(rows, cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows()):
            for j in range(b.ncols()):
                e = b[i, j]
                if e != 0:
                    out[r0 + i, c0 + j] = e
        r0 += b.nrows()
        c0 += b.ncols()
    return out


def kron(field: Field, a, b):
    """Kronecker product; row and column indices of ``a`` are most significant."""
    ar, ac, br, bc = a.nrows(), a.ncols(), b.nrows(), b.ncols()
    out = field.zeros(ar * br, ac * bc)
    bnz = [(k, l, b[k, l]) for k in range(br) for l in range(bc) if b[k, l] != 0]
    for i in range(ar):
        for j in range(ac):
            e = a[i, j]
            if e == 0:
                continue
            for k, l, v in bnz:
                out[i * br + k, j * bc + l] = e * v
    return out


def select_rows(field: Field, m, indices: Sequence[int]):
    cols = m.ncols()
    flat = []
    for i in indices:
        flat.extend(m[i, j] for j in range(cols))
    return field.matrix(len(indices), cols, flat)


def select_columns(field: Field, m, indices: Sequence[int]):
    return select_rows(field, m.transpose(), indices).transpose()


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of ``field^ambient`` given by independent rows.

    The rows restricted to ``pivots`` form an identity matrix, so the
    coordinates of a member vector are its entries at the pivot columns.
    ``full`` marks the whole ambient space, stored without materializing the
    identity.
    """

    field: Field
    ambient: int
    pivots: tuple
    _rows: object = None
    full: bool = False

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def matrix(self):
        if self.full:
            return self.field.identity(self.ambient)
        if self._rows is None:
            return self.field.zeros(0, self.ambient)
        return self._rows

    def vectors(self) -> list[list]:
        if self.full:
            return [[self.field.one if j == i else self.field.zero for j in range(self.ambient)]
                    for i in range(self.ambient)]
        return rows_of(self.matrix)

    def vector(self, i: int) -> list:
        if self.full:
            return [self.field.one if j == i else self.field.zero for j in range(self.ambient)]
        return row_of(self._rows, i)

    def combine(self, coords: Sequence) -> list:
        """The ambient vector with the given coordinates."""
        if len(coords) != self.dim:
            raise LinalgError(f"{len(coords)} coordinates for a {self.dim}-dim subspace")
        if self.full:
            return [self.field(c) for c in coords]
        out = [self.field.zero] * self.ambient
        rows = self._rows
        for i, c in enumerate(coords):
            if c == 0:
                continue
            for j in range(self.ambient):
                e = rows[i, j]
                if e != 0:
                    out[j] += c * e
        return out

    def coordinates(self, vec: Sequence, check: bool = True) -> list | None:
        """Coordinates of ``vec``; ``None`` when it is not in the subspace."""
        if len(vec) != self.ambient:
            raise LinalgError("vector length does not match the ambient dimension")
        coords = [vec[p] for p in self.pivots]
        if check and not self.full:
            back = self.combine(coords)
            if any(a != b for a, b in zip(back, vec)):
                return None
        return coords

    def contains(self, vec: Sequence) -> bool:
        return self.coordinates(vec) is not None

    def coordinate_matrix(self, m, check: bool = True):
        """Coordinates of every column of ``m`` (ambient x k) as a dim x k matrix."""
        if self.full:
            return m
        out = select_rows(self.field, m, self.pivots)
        if check:
            if self._rows is None:
                ok = is_zero(m)
            else:
                ok = self._rows.transpose() * out == m
            if not ok:
                raise LinalgError("columns do not lie in the subspace")
        return out

    def contains_all(self, vecs) -> bool:
        return all(self.contains(v) for v in vecs)


def subspace(field: Field, ambient: int, vectors: Sequence[Sequence] | object) -> SubspaceBasis:
    """Canonical basis of the span of ``vectors`` (rows)."""
    if hasattr(vectors, "nrows"):
        m = vectors
    else:
        vectors = [list(v) for v in vectors]
        m = field.from_rows(vectors, ambient)
    if m.ncols() != ambient:
        raise LinalgError("vectors do not live in the stated ambient space")
    if m.nrows() == 0 or ambient == 0:
        return SubspaceBasis(field, ambient, ())
    r, rank = m.rref()
    pivots = _pivots(r, rank)
    if rank == ambient:
        return SubspaceBasis(field, ambient, tuple(range(ambient)), full=True)
    return SubspaceBasis(field, ambient, tuple(pivots), select_rows(field, r, range(rank)))


def full_space(field: Field, ambient: int) -> SubspaceBasis:
    return SubspaceBasis(field, ambient, tuple(range(ambient)), full=True)


def zero_space(field: Field, ambient: int) -> SubspaceBasis:
    return SubspaceBasis(field, ambient, ())


def _pivots(r, rank: int) -> list[int]:
    pivots = []
    cols = r.ncols()
    j = 0
    for i in range(rank):
        while j < cols and r[i, j] == 0:
            j += 1
        pivots.append(j)
        j += 1
    return pivots


@dataclass(frozen=True)
class RREF:
    rank: int
    echelon: object
    pivots: tuple
    kernel: SubspaceBasis
    image: SubspaceBasis


def _kernel_from_rref(field: Field, r, rank: int, pivots: Sequence[int], cols: int) -> SubspaceBasis:
    free = [j for j in range(cols) if j not in set(pivots)]
    if not free:
        return SubspaceBasis(field, cols, ())
    if rank == 0:
        return SubspaceBasis(field, cols, tuple(range(cols)), full=True)
    k = field.zeros(len(free), cols)
    for t, f in enumerate(free):
        k[t, f] = field.one
        for i, p in enumerate(pivots):
            e = r[i, f]
            if e != 0:
                k[t, p] = -e
    return SubspaceBasis(field, cols, tuple(free), k)


def kernel(field: Field, m) -> SubspaceBasis:
    cols = m.ncols()
    if m.nrows() == 0 or cols == 0:
        return full_space(field, cols) if cols else SubspaceBasis(field, 0, ())
    r, rank = m.rref()
    return _kernel_from_rref(field, r, rank, _pivots(r, rank), cols)


def image(field: Field, m) -> SubspaceBasis:
    """Column space of ``m`` as a subspace of ``field^rows``."""
    return subspace(field, m.nrows(), m.transpose())


def rank(m) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def rref_decompose(field: Field, m) -> RREF:
    """Rank, reduced echelon form, pivot columns, kernel and image of ``m``."""
    rows, cols = m.nrows(), m.ncols()
    if rows == 0 or cols == 0:
        return RREF(0, field.zeros(rows, cols), (),
                    full_space(field, cols) if cols else SubspaceBasis(field, 0, ()),
                    SubspaceBasis(field, rows, ()))
    r, rk = m.rref()
    piv = _pivots(r, rk)
    return RREF(rk, r, tuple(piv), _kernel_from_rref(field, r, rk, piv, cols), image(field, m))


@dataclass(frozen=True)
class AffineSolution:
    particular: list
    kernel: SubspaceBasis


def solve_affine(field: Field, m, rhs: Sequence) -> AffineSolution | None:
    """One solution of ``m x = rhs`` plus the kernel, or ``None`` if infeasible."""
    rows, cols = m.nrows(), m.ncols()
    if len(rhs) != rows:
        raise LinalgError(f"right-hand side of length {len(rhs)} for {rows} rows")
    rhs = [field(v) for v in rhs]
    if rows == 0:
        return AffineSolution([field.zero] * cols, kernel(field, m))
    aug = hstack(field, [m, field.column(rhs)]) if cols else field.column(rhs)
    r, rk = aug.rref()
    piv = _pivots(r, rk)
    if piv and piv[-1] == cols:
        return None
    x = [field.zero] * cols
    for i, p in enumerate(piv):
        x[p] = r[i, cols]
    return AffineSolution(x, _kernel_from_rref(field, r, rk, piv, cols) if cols else SubspaceBasis(field, 0, ()))


@dataclass(frozen=True)
class Quotient:
    dim: int
    projection: object  # dim x ambient
    section: object  # ambient x dim
    relations: SubspaceBasis

    def project(self, vec: Sequence) -> list:
        return mat_vec(self.projection, vec)

    def lift(self, coords: Sequence) -> list:
        return mat_vec(self.section, coords)


def quotient_space(field: Field, ambient: int, relations: SubspaceBasis | Sequence) -> Quotient:
    """``field^ambient / span(relations)`` with a projection and a section.

    The quotient basis is the images of the standard vectors at the non-pivot
    columns of the relation basis.
    """
    if not isinstance(relations, SubspaceBasis):
        relations = subspace(field, ambient, relations)
    if relations.ambient != ambient:
        raise LinalgError("relations live in a different ambient space")
    piv = set(relations.pivots)
    keep = [j for j in range(ambient) if j not in piv]
    q = len(keep)
    proj = field.zeros(q, ambient)
    sect = field.zeros(ambient, q)
    for t, c in enumerate(keep):
        proj[t, c] = field.one
        sect[c, t] = field.one
    if relations.dim and not relations.full:
        rows = relations.matrix
        for i, p in enumerate(relations.pivots):
            for t, c in enumerate(keep):
                e = rows[i, c]
                if e != 0:
                    proj[t, p] = -e
    return Quotient(q, proj, sect, relations)
