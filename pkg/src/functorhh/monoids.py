"""
Monoids in the functor category given by product tables, bimodules with
genuine left and right actions, and solvers for module morphisms.

A bilinear table ``A(x) x B(y) -> C(x<>y)`` is a matrix with rows indexed by
the target basis and columns by pairs ``(i, j)`` with ``i`` most
significant, the same layout as a two-slot multilinear block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .category import CategoryPresentation, ValidationError, Violation
from .functors import (
    FunctorMorphism,
    LinearFunctor,
    NatSpace,
    _nat_layout,
    direct_sum,
    naturality_constraints,
    yoneda_dress_shift,
    zero_functor,
)
from .linalg import Field, kernel, kron, mat_vec, vstack, zero_of
from .multilinear import unmix


def table_from_nested(field: Field, nested, da: int, db: int, dc: int):
    """``[i][j][k]`` coefficient lists to a ``dc x (da*db)`` matrix."""
    m = field.zeros(dc, da * db)
    if len(nested) != da:
        raise ValueError(f"expected {da} outer entries, got {len(nested)}")
    for i, row in enumerate(nested):
        if len(row) != db:
            raise ValueError(f"expected {db} middle entries, got {len(row)}")
        for j, vec in enumerate(row):
            if len(vec) != dc:
                raise ValueError(f"expected {dc} coefficients, got {len(vec)}")
            for k, v in enumerate(vec):
                v = field(v)
                if v != 0:
                    m[k, i * db + j] = v
    return m


def table_to_nested(field: Field, m, da: int, db: int) -> list:
    return [[[field.format(m[k, i * db + j]) for k in range(m.nrows())] for j in range(db)]
            for i in range(da)]


def apply_bilinear(table, u: Sequence, v: Sequence) -> list:
    """``table(u, v)`` for coordinate vectors ``u``, ``v``."""
    w = [a * b for a in u for b in v]
    if not w:
        return [zero_of(table)] * table.nrows()
    return mat_vec(table, w)


def swap_matrix(field: Field, da: int, db: int):
    """Permutation taking column ``j*da+i`` to ``i*db+j``."""
    m = field.zeros(da * db, da * db)
    for i in range(da):
        for j in range(db):
            m[j * da + i, i * db + j] = field.one
    return m


def _first_bad_column(lhs, rhs):
    for c in range(lhs.ncols()):
        for r in range(lhs.nrows()):
            if lhs[r, c] != rhs[r, c]:
                return c
    return None


# ---------------------------------------------------------------------------
# monoids


class Monoid:
    """A monoid ``(A, product, unit)`` in the category of linear functors."""

    def __init__(self, functor: LinearFunctor, product: Mapping[tuple, object], unit: Sequence, name: str = ""):
        self.functor = functor
        self.category: CategoryPresentation = functor.category
        self.field: Field = functor.field
        self.name = name or functor.name
        cat, f = self.category, self.field
        self.product = {}
        for x in cat.objects:
            for y in cat.objects:
                da, db = functor.dims[x], functor.dims[y]
                dc = functor.dims[cat.tensor_obj(x, y)]
                m = product.get((x, y))
                if m is None:
                    m = f.zeros(dc, da * db)
                self.product[(x, y)] = m
        self.unit = [f(u) for u in unit]

    def dim(self, x: str) -> int:
        return self.functor.dims[x]

    def multiply(self, x: str, y: str, u: Sequence, v: Sequence) -> list:
        return apply_bilinear(self.product[(x, y)], u, v)

    def basis_vector(self, x: str, i: int) -> list:
        f = self.field
        return [f.one if k == i else f.zero for k in range(self.dim(x))]

    def left_multiplication(self, x: str, u: Sequence, y: str):
        """Matrix of ``b -> u*b`` from ``A(y)`` to ``A(x<>y)``."""
        return self.product[(x, y)] * kron(self.field, self.field.column(u), self.field.identity(self.dim(y)))

    def right_multiplication(self, y: str, v: Sequence, x: str):
        """Matrix of ``a -> a*v`` from ``A(x)`` to ``A(x<>y)``."""
        return self.product[(x, y)] * kron(self.field, self.field.identity(self.dim(x)), self.field.column(v))

    def as_bilinear_tables(self) -> dict:
        return dict(self.product)

    def violations(self) -> list[Violation]:
        out = list(self.functor.violations())
        if out:
            return out
        cat, f, A = self.category, self.field, self.functor
        for (x, y), m in self.product.items():
            dc = A.dims[cat.tensor_obj(x, y)]
            if (m.nrows(), m.ncols()) != (dc, A.dims[x] * A.dims[y]):
                out.append(Violation("malformed tables", (x, y), "product table has the wrong shape"))
        if len(self.unit) != A.dims[cat.unit]:
            out.append(Violation("malformed tables", (cat.unit,), "unit element has the wrong length"))
        if out:
            return out
        out += bilinear_naturality(cat, A, A, A, self.product, "product naturality")
        eps = f.column(self.unit)
        for x in cat.objects:
            d = A.dims[x]
            if not d:
                continue
            I = f.identity(d)
            left = self.product[(cat.unit, x)] * kron(f, eps, I)
            c = _first_bad_column(left, I)
            if c is not None:
                out.append(Violation("unit law", (x, c), "eps*a != a"))
            right = self.product[(x, cat.unit)] * kron(f, I, eps)
            c = _first_bad_column(right, I)
            if c is not None:
                out.append(Violation("unit law", (x, c), "a*eps != a"))
        for x in cat.objects:
            for y in cat.objects:
                xy = cat.tensor_obj(x, y)
                for z in cat.objects:
                    yz = cat.tensor_obj(y, z)
                    dx, dy, dz = A.dims[x], A.dims[y], A.dims[z]
                    if not (dx and dy and dz):
                        continue
                    lhs = self.product[(xy, z)] * kron(f, self.product[(x, y)], f.identity(dz))
                    rhs = self.product[(x, yz)] * kron(f, f.identity(dx), self.product[(y, z)])
                    c = _first_bad_column(lhs, rhs)
                    if c is not None:
                        i, j, k = unmix(c, (dx, dy, dz))
                        out.append(Violation("associativity", (x, y, z, i, j, k), "(ab)c != a(bc)"))
        return out

    def commutativity_failures(self) -> list[tuple]:
        """Basis pairs with ``A(s_{y,x})(b*a) != a*b``."""
        cat, f = self.category, self.field
        out = []
        for x in cat.objects:
            for y in cat.objects:
                dx, dy = self.dim(x), self.dim(y)
                if not (dx and dy):
                    continue
                twisted = self.functor.act(cat.symmetry(y, x)) * self.product[(y, x)] * swap_matrix(f, dx, dy)
                c = _first_bad_column(twisted, self.product[(x, y)])
                if c is not None:
                    out.append((x, y) + tuple(unmix(c, (dx, dy))))
        return out

    def is_commutative(self) -> bool:
        return not self.commutativity_failures()

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Monoid{nm} dims={self.functor.dims}>"


def bilinear_naturality(cat, S1: LinearFunctor, S2: LinearFunctor, T: LinearFunctor, tables: Mapping,
                        axiom: str) -> list[Violation]:
    """Check ``T(phi<>psi) m = m (S1(phi) x S2(psi))`` slot by slot on basis morphisms."""
    f = cat.field
    out = []
    for nm in cat.all_basis_names():
        if cat.is_identity_basis(nm):
            continue
        x, x2 = cat.basis_source_target(nm)
        phi = cat.basis_morphism(nm)
        for y in cat.objects:
            # first slot
            m1, m2 = tables[(x, y)], tables[(x2, y)]
            if S1.dims[x] * S2.dims[y]:
                lhs = T.act(cat.tensor(phi, cat.identity(y))) * m1
                rhs = m2 * kron(f, S1.actions[nm], f.identity(S2.dims[y]))
                if lhs != rhs:
                    out.append(Violation(axiom, (nm, y), "first slot"))
            # second slot
            m1, m2 = tables[(y, x)], tables[(y, x2)]
            if S1.dims[y] * S2.dims[x]:
                lhs = T.act(cat.tensor(cat.identity(y), phi)) * m1
                rhs = m2 * kron(f, f.identity(S1.dims[y]), S2.actions[nm])
                if lhs != rhs:
                    out.append(Violation(axiom, (y, nm), "second slot"))
    return out


def validate_monoid(functor: LinearFunctor, product: Mapping, unit: Sequence, name: str = "") -> Monoid:
    """Build a monoid from matrices or nested ``[i][j][k]`` lists and check every axiom."""
    cat, f = functor.category, functor.field
    tables = {}
    bad = []
    for key, m in product.items():
        x, y = key
        if x not in cat.objects or y not in cat.objects:
            bad.append(Violation("malformed tables", key, "unknown object"))
            continue
        if not hasattr(m, "nrows"):
            try:
                m = table_from_nested(f, m, functor.dims[x], functor.dims[y], functor.dims[cat.tensor_obj(x, y)])
            except ValueError as exc:
                bad.append(Violation("malformed tables", key, str(exc)))
                continue
        tables[(x, y)] = m
    if bad:
        raise ValidationError(bad)
    A = Monoid(functor, tables, unit, name)
    bad = A.violations()
    if bad:
        raise ValidationError(bad)
    return A


def opposite_monoid(A: Monoid) -> Monoid:
    """``a *op b = A(s_{y,x})(b * a)`` for ``a`` in ``A(x)``, ``b`` in ``A(y)``."""
    cat, f = A.category, A.field
    tables = {}
    for x in cat.objects:
        for y in cat.objects:
            dx, dy = A.dim(x), A.dim(y)
            tables[(x, y)] = A.functor.act(cat.symmetry(y, x)) * A.product[(y, x)] * swap_matrix(f, dx, dy)
    return Monoid(A.functor, tables, A.unit, f"{A.name}^op")


def unit_monoid(category: CategoryPresentation) -> Monoid:
    """``I = X(1, -)`` with product ``(phi, psi) -> phi <> psi``."""
    from .functors import yoneda_functor

    cat, f = category, category.field
    I = yoneda_functor(cat, cat.unit)
    tables = {}
    for x in cat.objects:
        for y in cat.objects:
            z = cat.tensor_obj(x, y)
            bx, by = cat.basis(cat.unit, x), cat.basis(cat.unit, y)
            m = f.zeros(I.dims[z], len(bx) * len(by))
            for i, a in enumerate(bx):
                for j, b in enumerate(by):
                    for k, c in enumerate(cat.tensor(a, b).coords):
                        if c != 0:
                            m[k, i * len(by) + j] = c
            tables[(x, y)] = m
    unit = list(cat.identity(cat.unit).coords)
    return validate_monoid(I, tables, unit, "I")


@dataclass
class MonoidMorphism:
    source: Monoid
    target: Monoid
    components: dict

    def __post_init__(self):
        self.morphism = FunctorMorphism(self.source.functor, self.target.functor, self.components)
        self.components = self.morphism.components

    def violations(self) -> list[Violation]:
        out = list(self.morphism.violations())
        if out:
            return out
        B, A = self.source, self.target
        cat, f = B.category, B.field
        if mat_vec(self.components[cat.unit], B.unit) != A.unit:
            out.append(Violation("unit preservation", (cat.unit,)))
        for x in cat.objects:
            for y in cat.objects:
                if not (B.dim(x) and B.dim(y)):
                    continue
                lhs = self.components[cat.tensor_obj(x, y)] * B.product[(x, y)]
                rhs = A.product[(x, y)] * kron(f, self.components[x], self.components[y])
                if lhs != rhs:
                    out.append(Violation("multiplicativity", (x, y)))
        return out

    def is_surjective(self) -> bool:
        return self.morphism.is_surjective()


def validate_monoid_morphism(source: Monoid, target: Monoid, components: Mapping) -> MonoidMorphism:
    m = MonoidMorphism(source, target, dict(components))
    bad = m.violations()
    if bad:
        raise ValidationError(bad)
    return m


# ---------------------------------------------------------------------------
# bimodules


class Bimodule:
    """``M`` with ``left[(x,y)] : A(x) x M(y) -> M(x<>y)`` and ``right[(y,x)] : M(y) x A(x) -> M(y<>x)``.

    A left module is a bimodule with ``right=None``.
    """

    def __init__(self, monoid: Monoid, functor: LinearFunctor, left: Mapping, right: Mapping | None,
                 name: str = ""):
        self.monoid = monoid
        self.functor = functor
        self.name = name or functor.name
        cat, f = monoid.category, monoid.field
        self.left = {}
        self.right = {} if right is not None else None
        for x in cat.objects:
            for y in cat.objects:
                da, dm = monoid.dim(x), functor.dims[y]
                m = left.get((x, y))
                self.left[(x, y)] = m if m is not None else f.zeros(functor.dims[cat.tensor_obj(x, y)], da * dm)
                if right is not None:
                    m = right.get((y, x))
                    self.right[(y, x)] = m if m is not None else f.zeros(functor.dims[cat.tensor_obj(y, x)], dm * da)

    @property
    def category(self):
        return self.monoid.category

    @property
    def field(self):
        return self.monoid.field

    def dim(self, x: str) -> int:
        return self.functor.dims[x]

    def act_left(self, x, y, a, m) -> list:
        return apply_bilinear(self.left[(x, y)], a, m)

    def act_right(self, y, x, m, a) -> list:
        return apply_bilinear(self.right[(y, x)], m, a)

    def violations(self) -> list[Violation]:
        out = list(self.functor.violations())
        if out:
            return out
        A, M = self.monoid, self.functor
        cat, f = A.category, A.field
        for (x, y), m in self.left.items():
            if (m.nrows(), m.ncols()) != (M.dims[cat.tensor_obj(x, y)], A.dim(x) * M.dims[y]):
                out.append(Violation("malformed tables", (x, y), "left action has the wrong shape"))
        for (y, x), m in (self.right or {}).items():
            if (m.nrows(), m.ncols()) != (M.dims[cat.tensor_obj(y, x)], M.dims[y] * A.dim(x)):
                out.append(Violation("malformed tables", (y, x), "right action has the wrong shape"))
        if out:
            return out
        out += bilinear_naturality(cat, A.functor, M, M, self.left, "left action naturality")
        if self.right is not None:
            out += bilinear_naturality(cat, M, A.functor, M, self.right, "right action naturality")
        eps = f.column(A.unit)
        one = cat.unit
        P = A.product
        for z in cat.objects:
            d = M.dims[z]
            if not d:
                continue
            I = f.identity(d)
            if _first_bad_column(self.left[(one, z)] * kron(f, eps, I), I) is not None:
                out.append(Violation("unit law", (z,), "eps*m != m"))
            if self.right is not None and _first_bad_column(self.right[(z, one)] * kron(f, I, eps), I) is not None:
                out.append(Violation("unit law", (z,), "m*eps != m"))
        objs = cat.objects
        for x in objs:
            for y in objs:
                for z in objs:
                    dx, dy, dz = A.dim(x), A.dim(y), M.dims[z]
                    if dx and dy and dz:
                        # (ab)m = a(bm)
                        lhs = self.left[(cat.tensor_obj(x, y), z)] * kron(f, P[(x, y)], f.identity(dz))
                        rhs = self.left[(x, cat.tensor_obj(y, z))] * kron(f, f.identity(dx), self.left[(y, z)])
                        c = _first_bad_column(lhs, rhs)
                        if c is not None:
                            out.append(Violation("left associativity", (x, y, z) + tuple(unmix(c, (dx, dy, dz)))))
                        if self.right is not None:
                            # m(ab) = (ma)b, with m in M(z), a in A(x), b in A(y)
                            lhs = self.right[(z, cat.tensor_obj(x, y))] * kron(f, f.identity(dz), P[(x, y)])
                            rhs = self.right[(cat.tensor_obj(z, x), y)] * kron(f, self.right[(z, x)], f.identity(dy))
                            c = _first_bad_column(lhs, rhs)
                            if c is not None:
                                out.append(Violation("right associativity", (z, x, y) + tuple(unmix(c, (dz, dx, dy)))))
                    if self.right is not None and dx and dz and dy:
                        # (a m) b = a (m b), a in A(x), m in M(z), b in A(y)
                        lhs = self.right[(cat.tensor_obj(x, z), y)] * kron(f, self.left[(x, z)], f.identity(dy))
                        rhs = self.left[(x, cat.tensor_obj(z, y))] * kron(f, f.identity(dx), self.right[(z, y)])
                        c = _first_bad_column(lhs, rhs)
                        if c is not None:
                            out.append(Violation("bimodule compatibility", (x, z, y) + tuple(unmix(c, (dx, dz, dy)))))
        return out

    def __repr__(self):
        kind = "Bimodule" if self.right is not None else "LeftModule"
        nm = f" {self.name}" if self.name else ""
        return f"<{kind}{nm} dims={self.functor.dims}>"


def _tables(f, raw, da_of, db_of, tc_of, side):
    out, bad = {}, []
    for key, m in (raw or {}).items():
        if not hasattr(m, "nrows"):
            try:
                m = table_from_nested(f, m, da_of(key), db_of(key), tc_of(key))
            except ValueError as exc:
                bad.append(Violation("malformed tables", key, f"{side}: {exc}"))
                continue
        out[key] = m
    return out, bad


def validate_bimodule(A: Monoid, functor: LinearFunctor, left: Mapping, right: Mapping | None,
                      name: str = "") -> Bimodule:
    """Build and check a bimodule (or a left module when ``right`` is None)."""
    cat, f = A.category, A.field
    if functor.category is not cat:
        raise ValidationError([Violation("malformed tables", (), "module lives over another category")])
    tc = lambda k: functor.dims[cat.tensor_obj(*k)]
    L, bad1 = _tables(f, left, lambda k: A.dim(k[0]), lambda k: functor.dims[k[1]], tc, "left")
    R, bad2 = ({}, [])
    if right is not None:
        R, bad2 = _tables(f, right, lambda k: functor.dims[k[0]], lambda k: A.dim(k[1]), tc, "right")
    if bad1 or bad2:
        raise ValidationError(bad1 + bad2)
    M = Bimodule(A, functor, L, R if right is not None else None, name)
    bad = M.violations()
    if bad:
        raise ValidationError(bad)
    return M


def regular_bimodule(A: Monoid) -> Bimodule:
    return Bimodule(A, A.functor, A.product, A.product, A.name)


def zero_bimodule(A: Monoid) -> Bimodule:
    return Bimodule(A, zero_functor(A.category), {}, {}, "0")


def _interleave_sum(f, t1, t2, da, d1, d2, e1, e2, module_first: bool):
    """Action table on ``M1 + M2`` from the tables on each summand."""
    dm = d1 + d2
    m = f.zeros(e1 + e2, da * dm)
    for a in range(da):
        for j in range(d1):
            src = j * da + a if module_first else a * d1 + j
            dst = j * da + a if module_first else a * dm + j
            for r in range(e1):
                v = t1[r, src]
                if v != 0:
                    m[r, dst] = v
        for j in range(d2):
            src = j * da + a if module_first else a * d2 + j
            dst = (d1 + j) * da + a if module_first else a * dm + d1 + j
            for r in range(e2):
                v = t2[r, src]
                if v != 0:
                    m[e1 + r, dst] = v
    return m


def direct_sum_bimodule(M: Bimodule, N: Bimodule) -> Bimodule:
    A = M.monoid
    cat, f = A.category, A.field
    F = direct_sum(M.functor, N.functor)
    left, right = {}, {}
    for x in cat.objects:
        for y in cat.objects:
            z = cat.tensor_obj(x, y)
            left[(x, y)] = _interleave_sum(f, M.left[(x, y)], N.left[(x, y)], A.dim(x), M.dim(y), N.dim(y),
                                           M.dim(z), N.dim(z), False)
            if M.right is not None and N.right is not None:
                z = cat.tensor_obj(y, x)
                right[(y, x)] = _interleave_sum(f, M.right[(y, x)], N.right[(y, x)], A.dim(x), M.dim(y), N.dim(y),
                                                M.dim(z), N.dim(z), True)
    both = M.right is not None and N.right is not None
    return Bimodule(A, F, left, right if both else None, f"{M.name}+{N.name}")


def shifted_bimodule(M: Bimodule, x: str) -> Bimodule:
    """``M_x``: left action untwisted, right action ``M(id_z <> s_{x,y}) r(m, a)``."""
    A = M.monoid
    cat = A.category
    F = yoneda_dress_shift(M.functor, x)
    left, right = {}, {}
    for y in cat.objects:
        for z in cat.objects:
            left[(y, z)] = M.left[(y, cat.tensor_obj(z, x))]
            if M.right is not None:
                twist = M.functor.act(cat.tensor(cat.identity(z), cat.symmetry(x, y)))
                right[(z, y)] = twist * M.right[(cat.tensor_obj(z, x), y)]
    return Bimodule(A, F, left, right if M.right is not None else None, f"{M.name}_{x}")


def restrict_to_left(M: Bimodule) -> Bimodule:
    return Bimodule(M.monoid, M.functor, M.left, None, M.name)


@dataclass
class BimoduleMorphism:
    source: Bimodule
    target: Bimodule
    components: dict

    def __post_init__(self):
        self.morphism = FunctorMorphism(self.source.functor, self.target.functor, self.components)
        self.components = self.morphism.components

    def violations(self) -> list[Violation]:
        out = list(self.morphism.violations())
        if out:
            return out
        M, N = self.source, self.target
        A = M.monoid
        cat, f = A.category, A.field
        phi = self.components
        for x in cat.objects:
            for y in cat.objects:
                if A.dim(x) and M.dim(y):
                    lhs = phi[cat.tensor_obj(x, y)] * M.left[(x, y)]
                    rhs = N.left[(x, y)] * kron(f, f.identity(A.dim(x)), phi[y])
                    if lhs != rhs:
                        out.append(Violation("left equivariance", (x, y)))
                if M.right is not None and N.right is not None and A.dim(x) and M.dim(y):
                    lhs = phi[cat.tensor_obj(y, x)] * M.right[(y, x)]
                    rhs = N.right[(y, x)] * kron(f, phi[y], f.identity(A.dim(x)))
                    if lhs != rhs:
                        out.append(Violation("right equivariance", (y, x)))
        return out


def validate_bimodule_morphism(M: Bimodule, N: Bimodule, components: Mapping) -> BimoduleMorphism:
    m = BimoduleMorphism(M, N, dict(components))
    bad = m.violations()
    if bad:
        raise ValidationError(bad)
    return m


def direct_sum_inclusions(M: Bimodule, N: Bimodule):
    """``M -> M+N -> N`` as bimodule morphisms."""
    S = direct_sum_bimodule(M, N)
    f = M.field
    inj, proj = {}, {}
    for x in M.category.objects:
        a, b = M.dim(x), N.dim(x)
        i = f.zeros(a + b, a)
        for t in range(a):
            i[t, t] = f.one
        p = f.zeros(b, a + b)
        for t in range(b):
            p[t, a + t] = f.one
        inj[x], proj[x] = i, p
    return S, BimoduleMorphism(M, S, inj), BimoduleMorphism(S, N, proj)


def hom_over_monoid(A: Monoid, M: Bimodule, N: Bimodule, x: str) -> NatSpace:
    """Left-module morphisms ``M -> N_x`` (natural and ``A``-equivariant)."""
    cat, f = A.category, A.field
    Nx = shifted_bimodule(N, x)
    offsets, total = _nat_layout(M.functor, Nx.functor)
    rows = [naturality_constraints(M.functor, Nx.functor, offsets, total)]
    eq = []
    for y in cat.objects:
        for z in cat.objects:
            da, dmz = A.dim(y), M.dim(z)
            yz = cat.tensor_obj(y, z)
            dmyz, dnyz, dnz = M.dim(yz), Nx.dim(yz), Nx.dim(z)
            if not (da and dmz and dnyz):
                continue
            Lm, Ln = M.left[(y, z)], Nx.left[(y, z)]
            for a_row in range(dnyz):
                for i in range(da):
                    for j in range(dmz):
                        col = i * dmz + j
                        row = {}
                        for b in range(dmyz):
                            v = Lm[b, col]
                            if v != 0:
                                key = offsets[yz] + a_row * dmyz + b
                                row[key] = row.get(key, f.zero) + v
                        for k in range(dnz):
                            v = Ln[a_row, i * dnz + k]
                            if v != 0:
                                key = offsets[z] + k * dmz + j
                                row[key] = row.get(key, f.zero) - v
                        row = {k: v for k, v in row.items() if v != 0}
                        if row:
                            eq.append(row)
    E = f.zeros(len(eq), total)
    for r, row in enumerate(eq):
        for c, v in row.items():
            E[r, c] = v
    rows.append(E)
    cons = vstack(f, rows, total)
    return NatSpace(M.functor, Nx.functor, offsets, kernel(f, cons))
