"""
Cup product of Hochschild cochains and the bracket of degree-one cocycles.
"""

from __future__ import annotations

from .hochschild import Cochain, HochschildComplex, cohomology_group
from .linalg import kron


def cup_product(f: Cochain, g: Cochain, target: HochschildComplex | None = None) -> Cochain:
    """``(f u g)(a, b) = M(id_X <> s_{x,Y} <> id_y)(f(a) . g(b))``.

    ``f`` has coefficients in ``A`` (degree ``i`` at ``x``) and ``g`` in a
    bimodule ``M`` (degree ``j`` at ``y``); the product uses the left action
    of ``A`` on ``M``, so ``i = 0`` is the action of the commutant.  The
    result lives in degree ``i+j`` at ``x<>y`` of ``target`` (by default
    ``g``'s complex).
    """
    hf, hg = f.complex, g.complex
    if hf.A is not hg.A and hf.A.functor is not hg.A.functor:
        raise ValueError("cochains over different monoids")
    if hf.M.functor is not hf.A.functor:
        raise ValueError("the left factor must have coefficients in the monoid itself")
    hc = target or hg
    cat, fld = hc.category, hc.field
    M = hc.M
    i, j = f.degree, g.degree
    x, y = f.at, g.at
    z = cat.tensor_obj(x, y)
    sp = hc.space(i + j, z)
    lay = sp.layout
    fam_f = f.space.decode(f.vector)
    fam_g = g.space.decode(g.vector)
    blocks = {}
    for Z in lay.tuples:
        X, Y = Z[:i], Z[i:]
        r, c = lay.shape(Z)
        if r * c == 0:
            blocks[Z] = fld.zeros(r, c)
            continue
        oX, oY = cat.tensor_objs(*X), cat.tensor_objs(*Y)
        fx, gy = fam_f[X], fam_g[Y]
        L = M.left[(cat.tensor_obj(oX, x), cat.tensor_obj(oY, y))]
        twist = M.functor.act(cat.tensor_all(cat.identity(oX), cat.symmetry(x, oY), cat.identity(y)))
        blocks[Z] = twist * L * kron(fld, fx, gy)
    return Cochain(hc, i + j, z, sp.encode(blocks))


def bracket_deg1(d: Cochain, e: Cochain) -> Cochain:
    """``[d, e]_y = e_{y<>x} d_y - A(id_y <> s_{x',x}) d_{y<>x'} e_y``.

    ``d`` lives at ``x`` and ``e`` at ``x'``; both are 1-cochains with
    coefficients in ``A``.  The result is a 1-cochain at ``x<>x'``.
    """
    hc = d.complex
    if e.complex.A is not hc.A:
        raise ValueError("cochains over different monoids")
    if d.degree != 1 or e.degree != 1:
        raise ValueError("the bracket is defined on 1-cochains")
    if hc.M.functor is not hc.A.functor:
        raise ValueError("the bracket needs coefficients in the monoid itself")
    cat, fld = hc.category, hc.field
    A = hc.A
    x, x2 = d.at, e.at
    z = cat.tensor_obj(x, x2)
    sp = hc.space(1, z)
    fd = d.space.decode(d.vector)
    fe = e.space.decode(e.vector)
    blocks = {}
    for (y,) in sp.layout.tuples:
        r, c = sp.layout.shape((y,))
        if r * c == 0:
            blocks[(y,)] = fld.zeros(r, c)
            continue
        first = fe[(cat.tensor_obj(y, x),)] * fd[(y,)]
        twist = A.functor.act(cat.tensor(cat.identity(y), cat.symmetry(x2, x)))
        second = twist * fd[(cat.tensor_obj(y, x2),)] * fe[(y,)]
        blocks[(y,)] = first - second
    return Cochain(hc, 1, z, sp.encode(blocks))


lie_bracket_deg1 = bracket_deg1


def is_derivation(d: Cochain) -> bool:
    return d.degree == 1 and d.is_cocycle()


def is_inner(d: Cochain) -> bool:
    """Whether a 1-cochain is ``beta`` of a 0-cochain."""
    from .hochschild import is_coboundary

    return is_coboundary(d.complex, d) is not None


def cup_on_classes(hc: HochschildComplex, i: int, x: str, j: int, y: str):
    """Structure constants of ``HH^i(x) x HH^j(y) -> HH^(i+j)(x<>y)`` on the chosen representatives.

    Entry ``[a][b]`` holds the class coordinates of ``rep_a u rep_b``.
    """
    Hi = cohomology_group(hc, i, x)
    Hj = cohomology_group(hc, j, y)
    z = hc.category.tensor_obj(x, y)
    Hk = cohomology_group(hc, i + j, z)
    out = []
    for ra in Hi.representatives:
        row = []
        fa = hc.cochain_from_coordinates(i, x, ra)
        for rb in Hj.representatives:
            gb = hc.cochain_from_coordinates(j, y, rb)
            row.append(Hk.coordinates(cup_product(fa, gb).coordinates()))
        out.append(row)
    return out
