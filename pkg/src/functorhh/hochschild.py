"""
The Hochschild cochain complex of a monoid with coefficients in a bimodule,
built directly on natural multilinear families.

``C^n(A, M)(x)`` is the space of natural families
``A(x1) x ... x A(xn) -> M(x1<>...<>xn<>x)``, i.e. multilinear families with
target the shifted bimodule ``M_x``; in degree 0 it is ``M(x)``.  For a
target tuple ``(y1, ..., y_{n+1})`` the face maps are

* face 1: ``l(a1, f(a2, ..., a_{n+1}))``
* face k, 2 <= k <= n+1: ``f(..., a_{k-1} a_k, ...)``
* face n+2: the right action of ``M_x``, ``M(id <> s_{x,y_{n+1}}) r(f(a1..an), a_{n+1})``

and ``beta = sum_k (-1)^(k+1) face_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .category import Morphism
from .complexes import (
    CochainComplex,
    CohomologyGroup,
    ComplexError,
    ComplexSES,
    LESReport,
    cohomology_of_complex,
    les_of_complex_ses,
)
from .linalg import SubspaceBasis, is_zero, kernel, image, mat_vec, rank, solve_affine, subspace
from .monoids import Bimodule, BimoduleMorphism, Monoid, regular_bimodule, shifted_bimodule
from .multilinear import MultilinearSpace, mixed_radix, unmix


class CochainSpace(MultilinearSpace):
    """``C^n(A, M)(x)``; arity 0 gives ``M(x)`` as a single ``dim x 1`` block."""

    def __init__(self, A: Monoid, Mx: Bimodule, n: int, x: str):
        self.monoid = A
        self.degree = n
        self.at = x
        super().__init__([A.functor] * n, Mx.functor)


def _sparse(field, rows: int, cols: int, entries: dict):
    m = field.zeros(rows, cols)
    for (i, j), v in entries.items():
        if v != 0:
            m[i, j] = v
    return m


def _add(entries: dict, key, v):
    entries[key] = entries.get(key, 0) + v


class HochschildComplex:
    """Cochain spaces, faces and differentials for ``(A, M)``, cached per degree and object."""

    def __init__(self, A: Monoid, M: Bimodule | None = None):
        if M is None:
            M = regular_bimodule(A)
        if M.right is None:
            raise ValueError("Hochschild cochains need a bimodule, not a left module")
        if M.monoid is not A and M.monoid.functor is not A.functor:
            raise ValueError("bimodule is over a different monoid")
        self.A = A
        self.M = M
        self.field = A.field
        self.category = A.category
        self._shift = {}
        self._space = {}
        self._face = {}
        self._diff = {}

    # spaces ---------------------------------------------------------------

    def bimodule_at(self, x: str) -> Bimodule:
        if x not in self._shift:
            if x not in self.category.objects:
                raise KeyError(f"unknown object {x!r}")
            self._shift[x] = shifted_bimodule(self.M, x)
        return self._shift[x]

    def space(self, n: int, x: str) -> CochainSpace:
        key = (n, x)
        if key not in self._space:
            if n < 0:
                raise ValueError("negative degree")
            self._space[key] = CochainSpace(self.A, self.bimodule_at(x), n, x)
        return self._space[key]

    # faces ------------------------------------------------------------------

    def face_ambient(self, n: int, k: int, x: str):
        """Face ``k`` (``1 <= k <= n+2``) on ambient coordinates ``C^n(x) -> C^(n+1)(x)``."""
        if not 1 <= k <= n + 2:
            raise IndexError(f"face index {k} out of range 1..{n + 2}")
        key = (n, k, x)
        if key in self._face:
            return self._face[key]
        cat, A = self.category, self.A
        Mx = self.bimodule_at(x)
        src, tgt = self.space(n, x).layout, self.space(n + 1, x).layout
        ent = {}
        for Y in tgt.tuples:
            offY, rY, cY, radY = tgt.blocks[Y]
            if rY * cY == 0:
                continue
            if k == 1:
                Z = Y[1:]
                offZ, rZ, cZ, _ = src.blocks[Z]
                L = Mx.left[(Y[0], cat.tensor_objs(*Z))]
                for r in range(rY):
                    for i1 in range(radY[0]):
                        for s in range(rZ):
                            v = L[r, i1 * rZ + s]
                            if v == 0:
                                continue
                            for c2 in range(cZ):
                                _add(ent, (offY + r * cY + i1 * cZ + c2, offZ + s * cZ + c2), v)
            elif k == n + 2:
                Z = Y[:n]
                offZ, rZ, cZ, _ = src.blocks[Z]
                R = Mx.right[(cat.tensor_objs(*Z), Y[n])]
                dl = radY[n]
                for r in range(rY):
                    for s in range(rZ):
                        for i in range(dl):
                            v = R[r, s * dl + i]
                            if v == 0:
                                continue
                            for c2 in range(cZ):
                                _add(ent, (offY + r * cY + c2 * dl + i, offZ + s * cZ + c2), v)
            else:
                j = k - 2  # merge slots j, j+1 (0-based)
                Z = Y[:j] + (cat.tensor_obj(Y[j], Y[j + 1]),) + Y[j + 2:]
                offZ, rZ, cZ, radZ = src.blocks[Z]
                P = A.product[(Y[j], Y[j + 1])]
                d2 = radY[j + 1]
                for c in range(cY):
                    idx = unmix(c, radY)
                    pc = idx[j] * d2 + idx[j + 1]
                    for p in range(P.nrows()):
                        v = P[p, pc]
                        if v == 0:
                            continue
                        cz = mixed_radix(idx[:j] + [p] + idx[j + 2:], radZ)
                        for r in range(rY):
                            _add(ent, (offY + r * cY + c, offZ + r * cZ + cz), v)
        m = _sparse(self.field, tgt.total, src.total, ent)
        self._face[key] = m
        return m

    def _to_basis(self, n: int, x: str, amb):
        """Coordinates in ``C^(n+1)(x)`` of the image of the basis of ``C^n(x)`` under ``amb``."""
        B = self.space(n, x).basis
        T = self.space(n + 1, x).basis
        if B.dim == 0 or T.dim == 0:
            return self.field.zeros(T.dim, B.dim)
        img = amb if B.full else amb * B.matrix.transpose()
        return T.coordinate_matrix(img)

    def face_map_dual(self, n: int, k: int, x: str):
        """Face ``k`` in cochain-space coordinates."""
        return self._to_basis(n, x, self.face_ambient(n, k, x))

    def differential_ambient(self, n: int, x: str):
        out = None
        for k in range(1, n + 3):
            fk = self.face_ambient(n, k, x)
            term = fk if k % 2 == 1 else -fk
            out = term if out is None else out + term
        return out

    def differential(self, n: int, x: str):
        """``beta : C^n(x) -> C^(n+1)(x)`` in cochain-space coordinates."""
        key = (n, x)
        if key not in self._diff:
            self._diff[key] = self._to_basis(n, x, self.differential_ambient(n, x))
        return self._diff[key]

    def apply_beta(self, n: int, x: str, vec: Sequence) -> list:
        """``beta`` on an ambient vector, returned as an ambient vector."""
        return mat_vec(self.differential_ambient(n, x), list(vec))

    def complex(self, x: str, top: int) -> CochainComplex:
        """Degrees ``0..top+1`` with differentials ``beta^0..beta^top``, checked."""
        dims = tuple(self.space(n, x).dim for n in range(top + 2))
        diffs = tuple(self.differential(n, x) for n in range(top + 1))
        for n in range(top):
            if diffs[n].ncols() and diffs[n + 1].nrows() and not is_zero(diffs[n + 1] * diffs[n]):
                raise ComplexError(f"beta o beta != 0 at degree {n}, object {x}", n)
        return CochainComplex(self.field, dims, diffs)

    def beta_squared_zero(self, n: int, x: str) -> bool:
        d0, d1 = self.differential(n, x), self.differential(n + 1, x)
        if not (d0.ncols() and d1.nrows()):
            return True
        return is_zero(d1 * d0)

    # cochains -----------------------------------------------------------------

    def cochain(self, n: int, x: str, vec: Sequence) -> "Cochain":
        return Cochain(self, n, x, [self.field(v) for v in vec])

    def cochain_from_coordinates(self, n: int, x: str, coords: Sequence) -> "Cochain":
        return Cochain(self, n, x, self.space(n, x).basis.combine(list(coords)))

    def cochain_from_function(self, n: int, x: str, fn) -> "Cochain":
        """Cochain whose value on basis tuple ``idxs`` at object tuple ``X`` is ``fn(X, idxs)``.

        The result is checked for naturality.
        """
        sp = self.space(n, x)
        lay = sp.layout
        vec = [self.field.zero] * lay.total
        for X, (off, r, c, rad) in lay.blocks.items():
            for col in range(c):
                val = fn(X, unmix(col, rad))
                for row in range(r):
                    vec[off + row * c + col] = self.field(val[row])
        if not sp.contains(vec):
            raise ValueError("family is not natural")
        return Cochain(self, n, x, vec)


@dataclass
class Cochain:
    """An element of ``C^n(A, M)(x)`` stored by its ambient coordinates."""

    complex: HochschildComplex
    degree: int
    at: str
    vector: list

    @property
    def space(self) -> CochainSpace:
        return self.complex.space(self.degree, self.at)

    def coordinates(self) -> list:
        c = self.space.basis.coordinates(self.vector)
        if c is None:
            raise ValueError("vector is not a natural family")
        return c

    def block(self, X):
        return self.space.decode(self.vector)[tuple(X)]

    def evaluate(self, X, idxs: Sequence[int]) -> list:
        return self.space.decode(self.vector).evaluate(tuple(X), idxs)

    def beta(self) -> "Cochain":
        hc = self.complex
        return Cochain(hc, self.degree + 1, self.at, hc.apply_beta(self.degree, self.at, self.vector))

    def is_cocycle(self) -> bool:
        return all(v == 0 for v in self.beta().vector)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.vector)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.complex, self.degree, self.at, [a + b for a, b in zip(self.vector, other.vector)])

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.complex, self.degree, self.at, [a - b for a, b in zip(self.vector, other.vector)])

    def __neg__(self):
        return Cochain(self.complex, self.degree, self.at, [-a for a in self.vector])

    def scale(self, c) -> "Cochain":
        c = self.complex.field(c)
        return Cochain(self.complex, self.degree, self.at, [c * a for a in self.vector])

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.degree == other.degree and self.at == other.at
                and list(self.vector) == list(other.vector))

    def _compatible(self, other):
        if (self.degree, self.at) != (other.degree, other.at):
            raise ValueError("cochains of different degree or base object")


# ---------------------------------------------------------------------------
# module level operations


def cochain_space(A: Monoid, M: Bimodule | None, n: int, x: str) -> CochainSpace:
    return HochschildComplex(A, M).space(n, x)


def hochschild_differential(A: Monoid, M: Bimodule | None, n: int, x: str):
    return HochschildComplex(A, M).differential(n, x)


def face_map_dual(A: Monoid, M: Bimodule | None, n: int, i: int, x: str):
    return HochschildComplex(A, M).face_map_dual(n, i, x)


@dataclass
class HHReport:
    """Cohomology dimensions per object, plus the groups themselves."""

    max_degree: int
    objects: list
    dims: dict  # object -> [dim HH^0, ..., dim HH^max]
    groups: dict  # object -> [CohomologyGroup]
    beta_squared: dict  # (n, object) -> bool
    cochain_dims: dict = dc_field(default_factory=dict)

    def table(self) -> list[list]:
        return [[x] + list(self.dims[x]) for x in self.objects]


def hh_compute(A: Monoid, M: Bimodule | None = None, max_degree: int = 3, objects: Sequence[str] | None = None,
               complex_: HochschildComplex | None = None) -> HHReport:
    """``HH^n(A, M)(x)`` for ``n <= max_degree`` at each requested object."""
    hc = complex_ or HochschildComplex(A, M)
    objs = list(objects) if objects is not None else list(A.category.objects)
    dims, groups, sq, cd = {}, {}, {}, {}
    for x in objs:
        c = hc.complex(x, max_degree)
        for n in range(max_degree):
            sq[(n, x)] = True
        gs = cohomology_of_complex(c)
        groups[x] = gs
        dims[x] = [g.dim for g in gs]
        cd[x] = list(c.dims)
    return HHReport(max_degree, objs, dims, groups, sq, cd)


def cohomology_group(hc: HochschildComplex, n: int, x: str) -> CohomologyGroup:
    c = hc.complex(x, n)
    return cohomology_of_complex(c, [n])[0]


def commutant(A: Monoid, M: Bimodule | None, x: str) -> SubspaceBasis:
    """``CM_A(x)`` inside ``M(x)``: the kernel of ``beta^0``."""
    hc = HochschildComplex(A, M)
    return kernel(A.field, hc.differential(0, x))


@dataclass
class DerivationReport:
    der: SubspaceBasis  # ambient coordinates of C^1(x)
    inn: SubspaceBasis
    hh1: int

    @property
    def dims(self) -> tuple:
        return self.der.dim, self.inn.dim, self.hh1


def _ambient_span(sp: CochainSpace, coords_basis: SubspaceBasis) -> SubspaceBasis:
    vecs = [sp.basis.combine(v) for v in coords_basis.vectors()]
    return subspace(sp.field, sp.ambient, vecs) if vecs else subspace(sp.field, sp.ambient, [])


def derivation_spaces(A: Monoid, M: Bimodule | None, x: str) -> DerivationReport:
    hc = HochschildComplex(A, M)
    f = A.field
    sp = hc.space(1, x)
    der = _ambient_span(sp, kernel(f, hc.differential(1, x)))
    inn = _ambient_span(sp, image(f, hc.differential(0, x)))
    if not der.contains_all(inn.vectors()):
        raise ComplexError("inner derivations are not derivations", 0)
    return DerivationReport(der, inn, der.dim - inn.dim)


def translation_ambient(hc: HochschildComplex, n: int, phi: Morphism):
    """Postcomposition with ``M(id <> phi)`` on ambient cochains at ``phi.source``."""
    cat = hc.category
    src, tgt = hc.space(n, phi.source).layout, hc.space(n, phi.target).layout
    ent = {}
    for X in src.tuples:
        offS, rS, cS, _ = src.blocks[X]
        offT, rT, cT, _ = tgt.blocks[X]
        if not (rS and rT and cS):
            continue
        T = hc.M.functor.act(cat.tensor(cat.identity(cat.tensor_objs(*X)), phi))
        for a in range(rT):
            for b in range(rS):
                v = T[a, b]
                if v == 0:
                    continue
                for c in range(cS):
                    ent[(offT + a * cT + c, offS + b * cS + c)] = v
    return _sparse(hc.field, tgt.total, src.total, ent)


def translation(hc: HochschildComplex, n: int, phi: Morphism):
    """The translation on cochain-space coordinates ``C^n(x) -> C^n(x')``."""
    amb = translation_ambient(hc, n, phi)
    B = hc.space(n, phi.source).basis
    T = hc.space(n, phi.target).basis
    if B.dim == 0 or T.dim == 0:
        return hc.field.zeros(T.dim, B.dim)
    img = amb if B.full else amb * B.matrix.transpose()
    return T.coordinate_matrix(img)


def hh_translate(A: Monoid, M: Bimodule | None, n: int, phi: Morphism, complex_: HochschildComplex | None = None):
    """The map ``HH^n(A, M)(x) -> HH^n(A, M)(x')`` induced by ``phi : x -> x'``."""
    hc = complex_ or HochschildComplex(A, M)
    f = A.field
    T = translation(hc, n, phi)
    Tn1 = translation(hc, n + 1, phi)
    if Tn1.nrows() and T.ncols() and Tn1 * hc.differential(n, phi.source) != hc.differential(n, phi.target) * T:
        raise ComplexError("translation does not commute with beta", n)
    Hs = cohomology_group(hc, n, phi.source)
    Ht = cohomology_group(hc, n, phi.target)
    cols = []
    for rep in Hs.representatives:
        cols.append(Ht.coordinates(mat_vec(T, rep)))
    return f.from_columns(cols, Ht.dim) if cols else f.zeros(Ht.dim, 0)


# ---------------------------------------------------------------------------
# long exact sequences


def chain_map(hc_src: HochschildComplex, hc_tgt: HochschildComplex, phi: BimoduleMorphism, n: int, x: str):
    """Postcomposition with ``phi`` on ``C^n(x)``, in cochain-space coordinates."""
    cat = hc_src.category
    src, tgt = hc_src.space(n, x), hc_tgt.space(n, x)
    ent = {}
    for X in src.layout.tuples:
        offS, rS, cS, _ = src.layout.blocks[X]
        offT, rT, cT, _ = tgt.layout.blocks[X]
        if not (rS and rT and cS):
            continue
        P = phi.components[cat.tensor_obj(cat.tensor_objs(*X), x)]
        for a in range(rT):
            for b in range(rS):
                v = P[a, b]
                if v == 0:
                    continue
                for c in range(cS):
                    ent[(offT + a * cT + c, offS + b * cS + c)] = v
    amb = _sparse(hc_src.field, tgt.ambient, src.ambient, ent)
    if src.dim == 0 or tgt.dim == 0:
        return hc_src.field.zeros(tgt.dim, src.dim)
    img = amb if src.basis.full else amb * src.basis.matrix.transpose()
    return tgt.basis.coordinate_matrix(img)


def hochschild_ses(inj: BimoduleMorphism, surj: BimoduleMorphism, x: str, max_degree: int) -> ComplexSES:
    """The cochain sequence induced by ``0 -> K -> M -> N -> 0`` of bimodules."""
    A = inj.source.monoid
    hK = HochschildComplex(A, inj.source)
    hM = HochschildComplex(A, inj.target)
    hN = HochschildComplex(A, surj.target)
    K = hK.complex(x, max_degree + 1)
    M = hM.complex(x, max_degree)
    N = hN.complex(x, max_degree)
    i = tuple(chain_map(hK, hM, inj, n, x) for n in range(max_degree + 2))
    p = tuple(chain_map(hM, hN, surj, n, x) for n in range(max_degree + 2))
    return ComplexSES(K, M, N, i, p)


def hochschild_les(inj: BimoduleMorphism, surj: BimoduleMorphism, x: str, max_degree: int = 3) -> LESReport:
    return les_of_complex_ses(hochschild_ses(inj, surj, x, max_degree), max_degree)


def is_coboundary(hc: HochschildComplex, c: Cochain):
    """A preimage ``g`` with ``beta g = c`` (as a cochain), or ``None``."""
    if c.degree == 0:
        return None if not c.is_zero() else hc.cochain(0, c.at, [hc.field.zero] * hc.space(0, c.at).ambient)
    D = hc.differential(c.degree - 1, c.at)
    sol = solve_affine(hc.field, D, c.coordinates())
    if sol is None:
        return None
    return hc.cochain_from_coordinates(c.degree - 1, c.at, sol.particular)


def class_rank(hc: HochschildComplex, cochains: Sequence[Cochain]) -> int:
    """Dimension of the span of the classes of the given cocycles."""
    if not cochains:
        return 0
    n, x = cochains[0].degree, cochains[0].at
    H = cohomology_group(hc, n, x)
    f = hc.field
    cols = [H.coordinates(c.coordinates()) for c in cochains]
    return rank(f.from_columns(cols, H.dim)) if H.dim else 0
