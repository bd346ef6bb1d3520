"""
Linear functors X -> Vect, natural transformations between them, the
Yoneda-Dress shift and internal hom values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .category import CategoryPresentation, Morphism, ValidationError, Violation
from .linalg import SubspaceBasis, is_zero, kernel, rank


class LinearFunctor:
    """A representation: a dimension per object and a matrix per basis morphism.

    ``act(phi)`` extends linearly to arbitrary morphism expressions.
    """

    def __init__(self, category: CategoryPresentation, dims: Mapping[str, int],
                 actions: Mapping[str, object], name: str = ""):
        self.category = category
        self.field = category.field
        self.name = name
        self.dims = {x: int(dims.get(x, 0)) for x in category.objects}
        self.actions = {}
        for nm in category.all_basis_names():
            x, y = category.basis_source_target(nm)
            if nm in actions:
                self.actions[nm] = actions[nm]
            elif self.dims[x] == 0 or self.dims[y] == 0:
                self.actions[nm] = self.field.zeros(self.dims[y], self.dims[x])
            elif category.is_identity_basis(nm):
                self.actions[nm] = self.field.identity(self.dims[x])
            else:
                self.actions[nm] = None
        self._cache = {}

    def dim(self, x: str) -> int:
        return self.dims[x]

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def act(self, phi: Morphism):
        """The matrix ``F(phi) : F(source) -> F(target)``."""
        key = (phi.source, phi.target, phi.coords)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        cat = self.category
        m = self.field.zeros(self.dims[phi.target], self.dims[phi.source])
        for nm, c in zip(cat.basis_names(phi.source, phi.target), phi.coords):
            if c != 0:
                a = self.actions[nm]
                if a is None:
                    raise ValidationError([Violation("malformed tables", (nm,), "missing action matrix")])
                m = m + a * c if m.nrows() and m.ncols() else m
        self._cache[key] = m
        return m

    def violations(self) -> list[Violation]:
        cat = self.category
        out = []
        for nm, a in self.actions.items():
            x, y = cat.basis_source_target(nm)
            if a is None:
                out.append(Violation("malformed tables", (nm,), "missing action matrix"))
            elif (a.nrows(), a.ncols()) != (self.dims[y], self.dims[x]):
                out.append(Violation("action shape", (nm,),
                                     f"expected {self.dims[y]}x{self.dims[x]}, got {a.nrows()}x{a.ncols()}"))
        if out:
            return out
        for x in cat.objects:
            if self.act(cat.identity(x)) != self.field.identity(self.dims[x]):
                out.append(Violation("functor identity", (x,), "F(id) != identity"))
        for x in cat.objects:
            for y in cat.objects:
                for z in cat.objects:
                    for f in cat.basis(x, y):
                        for g in cat.basis(y, z):
                            if self.act(cat.compose(g, f)) != self.act(g) * self.act(f):
                                out.append(Violation("functor composition", (cat._name(g), cat._name(f))))
        return out

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<LinearFunctor{nm} dims={self.dims}>"


def validate_functor(category: CategoryPresentation, dims: Mapping[str, int],
                     maps: Mapping[str, object] | None = None, name: str = "") -> LinearFunctor:
    """Build a functor from dimensions and action matrices, checking functoriality.

    ``maps`` values may be flint matrices or row lists; omitted identities
    default to identity matrices.
    """
    f = category.field
    actions = {}
    bad = []
    for x in dims:
        if x not in category.objects:
            bad.append(Violation("malformed tables", (x,), "unknown object"))
    for nm, m in (maps or {}).items():
        if nm not in category.all_basis_names():
            bad.append(Violation("malformed tables", (nm,), "unknown basis morphism"))
            continue
        if not hasattr(m, "nrows"):
            x, y = category.basis_source_target(nm)
            rows = [list(r) for r in m]
            m = f.from_rows(rows, dims.get(x, 0)) if rows else f.zeros(dims.get(y, 0), dims.get(x, 0))
        actions[nm] = m
    if bad:
        raise ValidationError(bad)
    F = LinearFunctor(category, dims, actions, name)
    bad = F.violations()
    if bad:
        raise ValidationError(bad)
    return F


def zero_functor(category: CategoryPresentation) -> LinearFunctor:
    return LinearFunctor(category, {}, {}, "0")


def constant_functor(category: CategoryPresentation, dims: Mapping[str, int]) -> LinearFunctor:
    """Identity actions on a category whose only basis morphisms are identities."""
    return validate_functor(category, dims)


def direct_sum(F: LinearFunctor, G: LinearFunctor) -> LinearFunctor:
    from .linalg import block_diag

    cat = F.category
    dims = {x: F.dims[x] + G.dims[x] for x in cat.objects}
    acts = {nm: block_diag(F.field, [F.actions[nm], G.actions[nm]]) for nm in cat.all_basis_names()}
    return LinearFunctor(cat, dims, acts, f"{F.name}+{G.name}")


def yoneda_functor(category: CategoryPresentation, x: str) -> LinearFunctor:
    """``X(x, -)``: basis of ``hom(x, y)`` at ``y``, postcomposition on morphisms."""
    cat = category
    if x not in cat.objects:
        raise KeyError(f"unknown object {x!r}")
    f = cat.field
    dims = {y: cat.hom_dim(x, y) for y in cat.objects}
    acts = {}
    for nm in cat.all_basis_names():
        y, z = cat.basis_source_target(nm)
        phi = cat.basis_morphism(nm)
        m = f.zeros(dims[z], dims[y])
        for j, b in enumerate(cat.basis(x, y)):
            img = cat.compose(phi, b)
            for i, c in enumerate(img.coords):
                if c != 0:
                    m[i, j] = c
        acts[nm] = m
    return LinearFunctor(cat, dims, acts, f"X({x},-)")


def yoneda_dress_shift(F: LinearFunctor, x: str) -> LinearFunctor:
    """``F_x = F o (- <> x)``."""
    cat = F.category
    if x not in cat.objects:
        raise KeyError(f"unknown object {x!r}")
    dims = {y: F.dims[cat.tensor_obj(y, x)] for y in cat.objects}
    idx = cat.identity(x)
    acts = {nm: F.act(cat.tensor(cat.basis_morphism(nm), idx)) for nm in cat.all_basis_names()}
    return LinearFunctor(cat, dims, acts, f"{F.name}_{x}")


shift = yoneda_dress_shift


@dataclass
class FunctorMorphism:
    """A natural transformation, one matrix per object."""

    source: LinearFunctor
    target: LinearFunctor
    components: dict

    def __post_init__(self):
        cat = self.source.category
        f = self.source.field
        comps = {}
        for x in cat.objects:
            m = self.components.get(x)
            if m is None:
                m = f.zeros(self.target.dims[x], self.source.dims[x])
            elif not hasattr(m, "nrows"):
                rows = [list(r) for r in m]
                m = f.from_rows(rows, self.source.dims[x]) if rows else f.zeros(self.target.dims[x], self.source.dims[x])
            comps[x] = m
        self.components = comps

    def __getitem__(self, x):
        return self.components[x]

    def violations(self) -> list[Violation]:
        cat = self.source.category
        out = []
        for x in cat.objects:
            m = self.components[x]
            if (m.nrows(), m.ncols()) != (self.target.dims[x], self.source.dims[x]):
                out.append(Violation("component shape", (x,)))
        if out:
            return out
        for nm in cat.all_basis_names():
            x, y = cat.basis_source_target(nm)
            if self.target.actions[nm] * self.components[x] != self.components[y] * self.source.actions[nm]:
                out.append(Violation("naturality", (nm,)))
        return out

    def compose(self, other: "FunctorMorphism") -> "FunctorMorphism":
        """``self o other``."""
        return FunctorMorphism(other.source, self.target,
                               {x: self.components[x] * other.components[x] for x in self.source.category.objects})

    def is_surjective(self) -> bool:
        return all(rank(m) == self.target.dims[x] for x, m in self.components.items())

    def is_injective(self) -> bool:
        return all(rank(m) == self.source.dims[x] for x, m in self.components.items())

    def __eq__(self, other):
        return isinstance(other, FunctorMorphism) and all(
            self.components[x] == other.components[x] for x in self.components)


def identity_morphism(F: LinearFunctor) -> FunctorMorphism:
    return FunctorMorphism(F, F, {x: F.field.identity(F.dims[x]) for x in F.category.objects})


def shift_along(F: LinearFunctor, phi: Morphism) -> FunctorMorphism:
    """``F_phi : F_x -> F_y`` with component ``F(id_w <> phi)`` at ``w``."""
    cat = F.category
    Fx = yoneda_dress_shift(F, phi.source)
    Fy = yoneda_dress_shift(F, phi.target)
    comps = {w: F.act(cat.tensor(cat.identity(w), phi)) for w in cat.objects}
    return FunctorMorphism(Fx, Fy, comps)


def shift_morphism(f: FunctorMorphism, x: str) -> FunctorMorphism:
    """``P_x(f)`` with component ``f_{y<>x}`` at ``y``."""
    cat = f.source.category
    return FunctorMorphism(yoneda_dress_shift(f.source, x), yoneda_dress_shift(f.target, x),
                           {y: f.components[cat.tensor_obj(y, x)] for y in cat.objects})


@dataclass(frozen=True)
class NatSpace:
    """All natural transformations ``source -> target`` as a subspace.

    Coordinates: per object in category order, the component matrix in
    row-major order.
    """

    source: LinearFunctor
    target: LinearFunctor
    offsets: dict
    basis: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.basis.dim

    def decode(self, vec) -> FunctorMorphism:
        comps = {}
        f = self.source.field
        for x, off in self.offsets.items():
            r, c = self.target.dims[x], self.source.dims[x]
            comps[x] = f.matrix(r, c, vec[off: off + r * c])
        return FunctorMorphism(self.source, self.target, comps)

    def encode(self, mor: FunctorMorphism) -> list:
        vec = []
        for x in self.offsets:
            vec.extend(mor.components[x].entries())
        return vec

    def morphisms(self) -> list[FunctorMorphism]:
        return [self.decode(v) for v in self.basis.vectors()]


def _nat_layout(F: LinearFunctor, G: LinearFunctor):
    offsets, off = {}, 0
    for x in F.category.objects:
        offsets[x] = off
        off += G.dims[x] * F.dims[x]
    return offsets, off


def naturality_constraints(F: LinearFunctor, G: LinearFunctor, offsets: dict, total: int):
    """Rows of ``G(phi) T_x - T_y F(phi) = 0`` over every basis ``phi : x -> y``."""
    cat = F.category
    fld = F.field
    rows = []
    for nm in cat.all_basis_names():
        if cat.is_identity_basis(nm):
            continue
        x, y = cat.basis_source_target(nm)
        Gp, Fp = G.actions[nm], F.actions[nm]
        gx, fx, gy, fy = G.dims[x], F.dims[x], G.dims[y], F.dims[y]
        for i in range(gy):
            for j in range(fx):
                row = {}
                # (G(phi) T_x)[i, j] = sum_k G(phi)[i, k] T_x[k, j]
                for k in range(gx):
                    c = Gp[i, k]
                    if c != 0:
                        key = offsets[x] + k * fx + j
                        row[key] = row.get(key, fld.zero) + c
                # (T_y F(phi))[i, j] = sum_k T_y[i, k] F(phi)[k, j]
                for k in range(fy):
                    c = Fp[k, j]
                    if c != 0:
                        key = offsets[y] + i * fy + k
                        row[key] = row.get(key, fld.zero) - c
                if any(v != 0 for v in row.values()):
                    rows.append(row)
    m = fld.zeros(len(rows), total)
    for r, row in enumerate(rows):
        for c, v in row.items():
            m[r, c] = v
    return m


def hom_functors(F: LinearFunctor, G: LinearFunctor) -> NatSpace:
    """Basis of ``Hom(F, G)`` solved from the naturality squares."""
    offsets, total = _nat_layout(F, G)
    cons = naturality_constraints(F, G, offsets, total)
    return NatSpace(F, G, offsets, kernel(F.field, cons))


def internal_hom_value(M: LinearFunctor, N: LinearFunctor, x: str) -> NatSpace:
    """``H(M, N)(x) = Hom(M, N_x)``."""
    return hom_functors(M, yoneda_dress_shift(N, x))


def internal_hom_map(M: LinearFunctor, N: LinearFunctor, phi: Morphism):
    """``H(M, N)(phi)`` in the bases of :func:`internal_hom_value`."""
    src = internal_hom_value(M, N, phi.source)
    tgt = internal_hom_value(M, N, phi.target)
    along = shift_along(N, phi)
    cols = []
    for t in src.morphisms():
        img = along.compose(t)
        c = tgt.basis.coordinates(tgt.encode(img))
        if c is None:
            raise ValueError("transported transformation is not natural")
        cols.append(c)
    f = M.field
    return f.from_columns(cols, tgt.dim) if cols else f.zeros(tgt.dim, 0)


def functor_equal(F: LinearFunctor, G: LinearFunctor) -> bool:
    return F.dims == G.dims and all(
        (F.actions[n] == G.actions[n]) or (is_zero(F.actions[n]) and is_zero(G.actions[n])
                                           and F.actions[n].nrows() == G.actions[n].nrows()
                                           and F.actions[n].ncols() == G.actions[n].ncols())
        for n in F.category.all_basis_names())
