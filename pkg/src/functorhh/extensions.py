"""
Square-zero extensions of a monoid by a shifted bimodule, their classifying
2-cocycles, equivalences between them and the Baer sum.

``E_f`` lives on ``M_x + A`` with the ``M_x`` coordinates first at every
object; its product is

    (m1, a1)(m2, a2) = (m1 . a2 + a1 . m2 + f(a1, a2), a1 a2)

with the actions of the shifted bimodule ``M_x``, and its unit is
``(-f(eps, eps), eps)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import ValidationError, Violation
from .functors import FunctorMorphism, LinearFunctor, direct_sum
from .hochschild import Cochain, HochschildComplex, is_coboundary
from .linalg import hstack, is_zero, kernel, kron, mat_vec, quotient_space, rank, solve_affine, subspace
from .monoids import Bimodule, Monoid, MonoidMorphism, validate_monoid


@dataclass
class ExtensionRep:
    """A monoid ``E`` with ``lam : M_x -> E``, ``pi : E -> A`` and a functor-level section ``sigma``."""

    total: Monoid
    base: Monoid
    kernel: LinearFunctor
    lam: FunctorMorphism
    pi: FunctorMorphism
    sigma: FunctorMorphism
    cocycle: Cochain | None = None

    @property
    def at(self):
        return self.cocycle.at if self.cocycle is not None else None

    def violations(self) -> list[Violation]:
        out = list(self.total.violations())
        cat, f = self.base.category, self.base.field
        pm = MonoidMorphism(self.total, self.base, self.pi.components)
        out += pm.violations()
        for x in cat.objects:
            lam, pi, sig = self.lam[x], self.pi[x], self.sigma[x]
            if rank(lam) != lam.ncols():
                out.append(Violation("injection", (x,), "lambda is not injective"))
            if pi.nrows() and pi.ncols() and lam.ncols() and not is_zero(pi * lam):
                out.append(Violation("exactness", (x,), "pi o lambda != 0"))
            if rank(lam) + rank(pi) != self.total.dim(x):
                out.append(Violation("exactness", (x,), "kernel of pi is not the image of lambda"))
            if pi.nrows() and pi * sig != f.identity(pi.nrows()):
                out.append(Violation("section", (x,), "pi o sigma != id"))
        out += self.sigma.violations()
        # the image of lambda is a square-zero ideal
        E = self.total
        for y in cat.objects:
            for z in cat.objects:
                ly, lz = self.lam[y], self.lam[z]
                if ly.ncols() and lz.ncols():
                    prod = E.product[(y, z)] * kron(f, ly, lz)
                    if not is_zero(prod):
                        out.append(Violation("square zero", (y, z)))
        return out


def _block_table(f, rows_m, rows_a, dm1, da1, dm2, da2, mm, am, ma, aa, fa):
    """Product table on ``(M + A) x (M + A)`` from its pieces.

    ``am``: A x M -> M, ``ma``: M x A -> M, ``aa``: A x A -> A, ``fa``: A x A -> M.
    """
    d1, d2 = dm1 + da1, dm2 + da2
    T = f.zeros(rows_m + rows_a, d1 * d2)
    for p in range(d1):
        for q in range(d2):
            col = p * d2 + q
            if p < dm1 and q >= dm2 and ma is not None:
                src = p * da2 + (q - dm2)
                for r in range(rows_m):
                    v = ma[r, src]
                    if v != 0:
                        T[r, col] = v
            elif p >= dm1 and q < dm2 and am is not None:
                src = (p - dm1) * dm2 + q
                for r in range(rows_m):
                    v = am[r, src]
                    if v != 0:
                        T[r, col] = v
            elif p >= dm1 and q >= dm2:
                src = (p - dm1) * da2 + (q - dm2)
                if fa is not None:
                    for r in range(rows_m):
                        v = fa[r, src]
                        if v != 0:
                            T[r, col] = v
                for r in range(rows_a):
                    v = aa[r, src]
                    if v != 0:
                        T[rows_m + r, col] = v
    return T


def _split_maps(f, cat, Mx: LinearFunctor, A: LinearFunctor):
    lam, pi, sig = {}, {}, {}
    for y in cat.objects:
        dm, da = Mx.dims[y], A.dims[y]
        l = f.zeros(dm + da, dm)
        s = f.zeros(dm + da, da)
        p = f.zeros(da, dm + da)
        for t in range(dm):
            l[t, t] = f.one
        for t in range(da):
            s[dm + t, t] = f.one
            p[t, dm + t] = f.one
        lam[y], pi[y], sig[y] = l, p, s
    return lam, pi, sig


def _extension_on_sum(A: Monoid, Mx: Bimodule, fam, name: str, check: bool = True):
    cat, f = A.category, A.field
    E_f = direct_sum(Mx.functor, A.functor)
    tables = {}
    for y in cat.objects:
        for z in cat.objects:
            yz = cat.tensor_obj(y, z)
            tables[(y, z)] = _block_table(
                f, Mx.dim(yz), A.dim(yz), Mx.dim(y), A.dim(y), Mx.dim(z), A.dim(z),
                None, Mx.left[(y, z)], Mx.right[(y, z)], A.product[(y, z)],
                None if fam is None else fam[(y, z)])
    one = cat.unit
    eps = list(A.unit)
    m_eps = [f.zero] * Mx.dim(one)
    if fam is not None and A.dim(one):
        block = fam[(one, one)]
        m_eps = [-v for v in mat_vec(block, [a * b for a in eps for b in eps])]
    unit = m_eps + eps
    E = validate_monoid(E_f, tables, unit, name) if check else Monoid(E_f, tables, unit, name)
    lam, pi, sig = _split_maps(f, cat, Mx.functor, A.functor)
    return E, (FunctorMorphism(Mx.functor, E_f, lam), FunctorMorphism(E_f, A.functor, pi),
               FunctorMorphism(A.functor, E_f, sig))


def extension_from_cocycle(f: Cochain, check: bool = True) -> ExtensionRep:
    """``E_f`` for a 2-cocycle ``f`` in ``C^2(A, M)(x)``."""
    if f.degree != 2:
        raise ValueError("extensions are classified by 2-cocycles")
    b = f.beta()
    if not b.is_zero():
        nz = next(i for i, v in enumerate(b.vector) if v != 0)
        raise ValidationError([Violation("cocycle condition", (nz,), "beta f != 0")])
    hc = f.complex
    Mx = hc.bimodule_at(f.at)
    fam = f.space.decode(f.vector)
    E, (lam, pi, sig) = _extension_on_sum(hc.A, Mx, fam, f"E[{f.at}]", check)
    ext = ExtensionRep(E, hc.A, Mx.functor, lam, pi, sig, f)
    if check:
        bad = ext.violations()
        if bad:
            raise ValidationError(bad)
    return ext


def semidirect_product(N: Bimodule, A: Monoid | None = None) -> Monoid:
    """``N x| A`` on ``N + A`` with ``(m1, a1)(m2, a2) = (m1 . a2 + a1 . m2, a1 a2)``."""
    A = A or N.monoid
    E, _ = _extension_on_sum(A, N, None, f"{N.name}x|{A.name}")
    return E


def zero_cocycle(hc: HochschildComplex, x: str) -> Cochain:
    return hc.cochain(2, x, [hc.field.zero] * hc.space(2, x).ambient)


def extension_cocycle(ext: ExtensionRep, hc: HochschildComplex, x: str) -> Cochain:
    """``f(a1, a2) = lam^{-1}(sigma(a1) sigma(a2) - sigma(a1 a2))`` as a 2-cochain at ``x``."""
    cat, fld = hc.category, hc.field
    E, A = ext.total, ext.base
    sp = hc.space(2, x)
    blocks = {}
    for Y in sp.layout.tuples:
        y, z = Y
        yz = cat.tensor_obj(y, z)
        r, c = sp.layout.shape(Y)
        if r * c == 0:
            blocks[Y] = fld.zeros(r, c)
            continue
        diff = E.product[Y] * kron(fld, ext.sigma[y], ext.sigma[z]) - ext.sigma[yz] * A.product[Y]
        lam = ext.lam[yz]
        cols = []
        for j in range(diff.ncols()):
            sol = solve_affine(fld, lam, [diff[i, j] for i in range(diff.nrows())])
            if sol is None:
                raise ValueError("sigma is not multiplicative modulo the kernel")
            cols.append(sol.particular)
        blocks[Y] = fld.from_columns(cols, lam.ncols())
    out = hc.cochain(2, x, sp.encode(blocks))
    if not out.is_cocycle():
        raise ValueError("extracted cochain is not a cocycle")
    return out


@dataclass
class Equivalence:
    source: ExtensionRep
    target: ExtensionRep
    components: dict
    g: Cochain | None

    def violations(self) -> list[Violation]:
        E, E2 = self.source, self.target
        cat, f = E.base.category, E.base.field
        out = MonoidMorphism(E.total, E2.total, self.components).violations()
        for x in cat.objects:
            phi = self.components[x]
            if rank(phi) != E.total.dim(x) or E.total.dim(x) != E2.total.dim(x):
                out.append(Violation("isomorphism", (x,)))
            if phi * E.lam[x] != E2.lam[x]:
                out.append(Violation("commutes with injections", (x,)))
            if E2.pi[x] * phi != E.pi[x]:
                out.append(Violation("commutes with projections", (x,)))
        return out


def _phi_g(hc: HochschildComplex, g: Cochain, x: str):
    """``(m, a) -> (m + g(a), a)`` on ``M_x + A`` at every object."""
    cat, f = hc.category, hc.field
    Mx = hc.bimodule_at(x)
    fam = g.space.decode(g.vector)
    comps = {}
    for y in cat.objects:
        dm, da = Mx.dim(y), hc.A.dim(y)
        m = f.identity(dm + da)
        gy = fam[(y,)]
        for r in range(dm):
            for c in range(da):
                v = gy[r, c]
                if v != 0:
                    m[r, dm + c] = v
        comps[y] = m
    return comps


def _psi(ext: ExtensionRep, y):
    """``(m, a) -> lam(m) + sigma(a)``."""
    return hstack(ext.base.field, [ext.lam[y], ext.sigma[y]], ext.total.dim(y))


def extension_equivalence(E: ExtensionRep, E2: ExtensionRep, hc: HochschildComplex, x: str,
                          g: Cochain | None = None) -> Equivalence | None:
    """An equivalence ``E -> E2`` of extensions, or ``None`` when the classes differ.

    With ``g`` given, ``f_E - f_E2 = beta g`` is required.  The map is
    ``psi_E2 o phi_g o psi_E^{-1}`` where ``psi(m, a) = lam(m) + sigma(a)``
    and ``phi_g(m, a) = (m + g(a), a)``.
    """
    fE = extension_cocycle(E, hc, x)
    fE2 = extension_cocycle(E2, hc, x)
    diff = fE - fE2
    if g is None:
        g = is_coboundary(hc, diff)
        if g is None:
            return None
    elif g.beta() != diff:
        raise ValueError("f - f' != beta g")
    phi = _phi_g(hc, g, x)
    comps = {}
    for y in hc.category.objects:
        comps[y] = _psi(E2, y) * phi[y] * _psi(E, y).inv() if E.total.dim(y) else phi[y]
    eq = Equivalence(E, E2, comps, g)
    bad = eq.violations()
    if bad:
        raise ValidationError(bad)
    return eq


def baer_sum(E: ExtensionRep, E2: ExtensionRep) -> ExtensionRep:
    """Pull back along the two projections, then identify the two copies of ``M_x``."""
    A = E.base
    cat, f = A.category, A.field
    if E.kernel.dims != E2.kernel.dims:
        raise ValueError("extensions by different functors")
    gamma, quot, dims = {}, {}, {}
    for y in cat.objects:
        d1, d2 = E.total.dim(y), E2.total.dim(y)
        cond = hstack(f, [E.pi[y], -E2.pi[y]], A.dim(y))
        G = kernel(f, cond) if d1 + d2 else subspace(f, 0, [])
        gamma[y] = G
        rel = []
        for t in range(E.kernel.dims[y]):
            v = [E.lam[y][i, t] for i in range(d1)] + [-E2.lam[y][i, t] for i in range(d2)]
            rel.append(G.coordinates(v))
        quot[y] = quotient_space(f, G.dim, rel)
        dims[y] = quot[y].dim

    def to_q(y, vec):
        return quot[y].project(gamma[y].coordinates(vec))

    def from_q(y, coords):
        return gamma[y].combine(quot[y].lift(coords))

    def basis_lifts(y):
        return [from_q(y, [f.one if i == j else f.zero for i in range(dims[y])]) for j in range(dims[y])]

    acts = {}
    for nm in cat.all_basis_names():
        y, y2 = cat.basis_source_target(nm)
        d1 = E.total.dim(y)
        act = E.total.functor.actions[nm]
        act2 = E2.total.functor.actions[nm]
        cols = []
        for v in basis_lifts(y):
            w = mat_vec(act, v[:d1]) + mat_vec(act2, v[d1:])
            cols.append(to_q(y2, w))
        acts[nm] = f.from_columns(cols, dims[y2]) if cols else f.zeros(dims[y2], 0)
    F = LinearFunctor(cat, dims, acts, "baer")
    tables = {}
    for y in cat.objects:
        ly = basis_lifts(y)
        for z in cat.objects:
            lz = basis_lifts(z)
            yz = cat.tensor_obj(y, z)
            d1y, d1z = E.total.dim(y), E.total.dim(z)
            cols = []
            for u in ly:
                for v in lz:
                    w = E.total.multiply(y, z, u[:d1y], v[:d1z]) + E2.total.multiply(y, z, u[d1y:], v[d1z:])
                    cols.append(to_q(yz, w))
            tables[(y, z)] = f.from_columns(cols, dims[yz]) if cols else f.zeros(dims[yz], 0)
    one = cat.unit
    unit = to_q(one, list(E.total.unit) + list(E2.total.unit))
    total = validate_monoid(F, tables, unit, "baer")
    lam, pi, sig = {}, {}, {}
    for y in cat.objects:
        d1, d2 = E.total.dim(y), E2.total.dim(y)
        cols = []
        for t in range(E.kernel.dims[y]):
            v = [E.lam[y][i, t] for i in range(d1)] + [f.zero] * d2
            cols.append(to_q(y, v))
        lam[y] = f.from_columns(cols, dims[y]) if cols else f.zeros(dims[y], 0)
        cols = []
        for t in range(A.dim(y)):
            v = [E.sigma[y][i, t] for i in range(d1)] + [E2.sigma[y][i, t] for i in range(d2)]
            cols.append(to_q(y, v))
        sig[y] = f.from_columns(cols, dims[y]) if cols else f.zeros(dims[y], 0)
        rows = [mat_vec(E.pi[y], v[:d1]) for v in basis_lifts(y)]
        pi[y] = f.from_columns(rows, A.dim(y)) if rows else f.zeros(A.dim(y), 0)
    ext = ExtensionRep(total, A, E.kernel,
                       FunctorMorphism(E.kernel, F, lam), FunctorMorphism(F, A.functor, pi),
                       FunctorMorphism(A.functor, F, sig))
    bad = ext.violations()
    if bad:
        raise ValidationError(bad)
    return ext
