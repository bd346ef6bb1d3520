"""Finite cochain complexes of vector spaces and their long exact sequences."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .linalg import (
    Field,
    block_diag,
    LinalgError,
    SubspaceBasis,
    image,
    is_zero,
    kernel,
    mat_vec,
    quotient_space,
    rank,
    solve_affine,
)


class ComplexError(ValueError):
    """A differential squares to something nonzero, or shapes disagree."""

    def __init__(self, message: str, degree: int | None = None):
        super().__init__(message)
        self.degree = degree


@dataclass(frozen=True)
class CochainComplex:
    """Degrees ``0..top+1`` with ``d^n : C^n -> C^{n+1}`` for ``n = 0..top``.

    Cohomology is available in degrees ``0..top``; the space in degree
    ``top+1`` only receives the last differential.
    """

    field: Field
    dims: tuple
    differentials: tuple

    @property
    def top(self) -> int:
        return len(self.differentials) - 1

    def check(self):
        if len(self.dims) != len(self.differentials) + 1:
            raise ComplexError("need one more space than differentials")
        for n, d in enumerate(self.differentials):
            if d.nrows() != self.dims[n + 1] or d.ncols() != self.dims[n]:
                raise ComplexError(
                    f"d^{n} has shape {d.nrows()}x{d.ncols()}, expected "
                    f"{self.dims[n + 1]}x{self.dims[n]}", n)
        for n in range(len(self.differentials) - 1):
            d0, d1 = self.differentials[n], self.differentials[n + 1]
            if d0.ncols() and d1.nrows() and not is_zero(d1 * d0):
                raise ComplexError(f"d^{n + 1} d^{n} != 0", n)
        return self


def make_complex(field: Field, differentials: Sequence, dims: Sequence[int] | None = None) -> CochainComplex:
    differentials = tuple(differentials)
    if dims is None:
        dims = [d.ncols() for d in differentials] + [differentials[-1].nrows()]
    return CochainComplex(field, tuple(dims), differentials).check()


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    dim: int
    cocycles: SubspaceBasis
    representatives: list  # ambient vectors
    _quotient: object = dc_field(repr=False, default=None)

    def coordinates(self, cocycle: Sequence) -> list:
        """Class coordinates of a cocycle (raises if it is not one)."""
        zc = self.cocycles.coordinates(cocycle)
        if zc is None:
            raise LinalgError(f"vector is not a cocycle in degree {self.degree}")
        if not zc:
            return []
        return mat_vec(self._quotient.projection, zc)

    def is_coboundary(self, cocycle: Sequence) -> bool:
        return all(c == 0 for c in self.coordinates(cocycle))


def cohomology_of_complex(c: CochainComplex, degrees: Sequence[int] | None = None) -> list[CohomologyGroup]:
    """Cohomology in each degree ``0..top`` (or the ones asked for)."""
    c.check()
    f = c.field
    if degrees is None:
        degrees = range(c.top + 1)
    out = []
    for n in degrees:
        z = kernel(f, c.differentials[n])
        if n == 0 or z.dim == 0:
            b_coords = []
        else:
            prev = c.differentials[n - 1]
            b_img = image(f, prev)
            b_coords = [z.coordinates(v) for v in b_img.vectors()]
            if any(v is None for v in b_coords):
                raise ComplexError(f"image of d^{n - 1} not inside ker d^{n}", n - 1)
        q = quotient_space(f, z.dim, b_coords)
        reps = []
        for j in range(q.dim):
            zc = [q.section[i, j] for i in range(z.dim)]
            reps.append(z.combine(zc))
        out.append(CohomologyGroup(n, q.dim, z, reps, q))
    return out


def cohomology_dims(c: CochainComplex) -> list[int]:
    """Dimensions only, by rank counting."""
    c.check()
    ranks = [rank(d) for d in c.differentials]
    return [c.dims[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(c.top + 1)]


# ---------------------------------------------------------------------------
# short exact sequences


@dataclass(frozen=True)
class ComplexSES:
    """``0 -> K -> M -> N -> 0`` degreewise, with chain maps ``inj`` and ``surj``."""

    K: CochainComplex
    M: CochainComplex
    N: CochainComplex
    inj: tuple
    surj: tuple

    def violations(self) -> list[str]:
        f = self.M.field
        out = []
        nd = min(len(self.K.dims), len(self.M.dims), len(self.N.dims), len(self.inj), len(self.surj))
        for n in range(nd):
            i, p = self.inj[n], self.surj[n]
            k, m, nn = self.K.dims[n], self.M.dims[n], self.N.dims[n]
            if (i.nrows(), i.ncols()) != (m, k) or (p.nrows(), p.ncols()) != (nn, m):
                out.append(f"degree {n}: map shapes do not match the complexes")
                continue
            ri, rp = rank(i), rank(p)
            if ri != k:
                out.append(f"degree {n}: injection is not injective")
            if rp != nn:
                out.append(f"degree {n}: surjection is not surjective")
            if m and k and nn and not is_zero(p * i):
                out.append(f"degree {n}: surj . inj != 0")
            if ri + rp != m:
                out.append(f"degree {n}: not exact in the middle")
        for n in range(nd - 1):
            for name, src, tgt, phi in (
                ("injection", self.K, self.M, self.inj),
                ("surjection", self.M, self.N, self.surj),
            ):
                if n >= len(src.differentials) or n >= len(tgt.differentials) or n + 1 >= len(phi):
                    continue
                lhs = phi[n + 1] * src.differentials[n]
                rhs = tgt.differentials[n] * phi[n]
                if lhs != rhs:
                    out.append(f"degree {n}: {name} is not a chain map")
        return out


@dataclass
class LESReport:
    max_degree: int
    dims_K: list
    dims_M: list
    dims_N: list
    maps_i: list  # H^n(K) -> H^n(M)
    maps_p: list  # H^n(M) -> H^n(N)
    connecting: list  # H^n(N) -> H^{n+1}(K)
    junctions: list  # (label, exact?)

    @property
    def exact(self) -> bool:
        return all(ok for _, ok in self.junctions)


def _induced(field: Field, phi, src: CohomologyGroup, tgt: CohomologyGroup):
    cols = []
    for rep in src.representatives:
        cols.append(tgt.coordinates(mat_vec(phi, rep)))
    return field.from_columns(cols, tgt.dim) if cols else field.zeros(tgt.dim, 0)


def les_of_complex_ses(s: ComplexSES, max_degree: int) -> LESReport:
    """Cohomology long exact sequence through ``H^max_degree(N) -> H^{max+1}(K)``.

    ``K`` must carry cohomology through ``max_degree + 1``; ``M`` and ``N``
    through ``max_degree``.
    """
    bad = s.violations()
    if bad:
        raise ComplexError("; ".join(bad))
    if s.K.top < max_degree + 1 or s.M.top < max_degree or s.N.top < max_degree:
        raise ComplexError("complexes are too short for the requested degree")
    f = s.M.field
    HK = cohomology_of_complex(s.K, range(max_degree + 2))
    HM = cohomology_of_complex(s.M, range(max_degree + 1))
    HN = cohomology_of_complex(s.N, range(max_degree + 1))
    mi, mp, conn = [], [], []
    for n in range(max_degree + 1):
        mi.append(_induced(f, s.inj[n], HK[n], HM[n]))
        mp.append(_induced(f, s.surj[n], HM[n], HN[n]))
        cols = []
        for z in HN[n].representatives:
            lift = solve_affine(f, s.surj[n], z)
            if lift is None:
                raise ComplexError(f"surjection fails to hit a cocycle in degree {n}")
            dy = mat_vec(s.M.differentials[n], lift.particular)
            pre = solve_affine(f, s.inj[n + 1], dy)
            if pre is None:
                raise ComplexError(f"d(lift) not in the image of K in degree {n + 1}")
            cols.append(HK[n + 1].coordinates(pre.particular))
        conn.append(f.from_columns(cols, HK[n + 1].dim) if cols else f.zeros(HK[n + 1].dim, 0))

    # the sequence 0 -> H0K -> H0M -> H0N -> H1K -> ... -> HmaxN
    seq = []
    for n in range(max_degree + 1):
        seq.append((f"H^{n}(K)", HK[n].dim, mi[n]))
        seq.append((f"H^{n}(M)", HM[n].dim, mp[n]))
        seq.append((f"H^{n}(N)", HN[n].dim, conn[n]))
    junctions = []
    prev_map, prev_rank = None, 0
    for label, dim, out_map in seq:
        r_out = rank(out_map)
        ok = (dim - r_out) == prev_rank
        if prev_map is not None and out_map.nrows() and prev_map.ncols():
            ok = ok and is_zero(out_map * prev_map)
        junctions.append((label, ok))
        prev_map, prev_rank = out_map, r_out
    return LESReport(
        max_degree,
        [g.dim for g in HK[: max_degree + 1]],
        [g.dim for g in HM],
        [g.dim for g in HN],
        mi, mp, conn, junctions,
    )


def direct_sum_ses(K: CochainComplex, N: CochainComplex) -> ComplexSES:
    """The split sequence ``K -> K + N -> N``."""
    f = K.field
    top = min(K.top, N.top)
    dims = [K.dims[n] + N.dims[n] for n in range(top + 2)]
    diffs = [block_diag(f, [K.differentials[n], N.differentials[n]]) for n in range(top + 1)]
    M = CochainComplex(f, tuple(dims), tuple(diffs))
    inj, surj = [], []
    for n in range(top + 2):
        k, nn = K.dims[n], N.dims[n]
        i = f.zeros(k + nn, k)
        for t in range(k):
            i[t, t] = f.one
        p = f.zeros(nn, k + nn)
        for t in range(nn):
            p[t, k + t] = f.one
        inj.append(i)
        surj.append(p)
    Kt = CochainComplex(f, K.dims[: top + 2], K.differentials[: top + 1])
    Nt = CochainComplex(f, N.dims[: top + 2], N.differentials[: top + 1])
    return ComplexSES(Kt, M.check(), Nt, tuple(inj), tuple(surj))


def euler_characteristic(dims: Sequence[int]) -> int:
    return sum((-1) ** n * d for n, d in enumerate(dims))
