"""
Small standard inputs: base categories, monoids and bimodules used by the
tests, the demos and the CLI.
"""

from __future__ import annotations

from .category import CategoryPresentation, validate_presentation
from .linalg import Field


def _field(field) -> Field:
    if field is None:
        return Field.rationals()
    if isinstance(field, Field):
        return field
    if isinstance(field, int):
        return Field(field)
    return Field.parse(field)


# ---------------------------------------------------------------------------
# categories


def trivial_category(field=None) -> CategoryPresentation:
    """X1: one object ``1`` whose endomorphisms are the scalars."""
    f = _field(field)
    raw = {
        "field": str(f),
        "objects": ["1"],
        "unit": "1",
        "tensor": [["1", "1", "1"]],
        "hom": {"1->1": ["id_1"]},
    }
    return validate_presentation(raw, "X1")


def c2_category(field=None, super_sign: bool = False) -> CategoryPresentation:
    """XC2 (``super_sign=False``) or XC2super: objects ``e, g`` with ``g<>g = e``.

    Only identities; the symmetry at ``(g,g)`` is ``-id_e`` in the super case.
    """
    f = _field(field)
    raw = {
        "field": str(f),
        "objects": ["e", "g"],
        "unit": "e",
        "tensor": [["e", "e", "e"], ["e", "g", "g"], ["g", "e", "g"], ["g", "g", "e"]],
        "hom": {"e->e": ["id_e"], "g->g": ["id_g"]},
        "symmetry": {"(g,g)": {"id_e": -1 if super_sign else 1}},
    }
    return validate_presentation(raw, "XC2super" if super_sign else "XC2")


def group_algebra_category(field=None) -> CategoryPresentation:
    """XK: one object whose endomorphism algebra is ``k[C2] = span{id, t}``.

    Tensor and composition of endomorphisms both multiply in ``k[C2]``.
    """
    f = _field(field)
    raw = {
        "field": str(f),
        "objects": ["1"],
        "unit": "1",
        "tensor": [["1", "1", "1"]],
        "hom": {"1->1": ["id", "t"]},
        "identity": {"1": {"id": 1}},
        "compose": {"(t,t)": {"id": 1}},
        "tensor_mor": {"(t,t)": {"id": 1}},
    }
    return validate_presentation(raw, "XK")


# ---------------------------------------------------------------------------
# monoids and bimodules


def dual_numbers_monoid(field=None):
    """``k[x]/(x^2)`` on X1, basis ``1, x``."""
    from .oracle import dual_numbers, lift_algebra

    return lift_algebra(dual_numbers(_field(field)))[0]


def group_algebra_monoid(field=None):
    """``k[C2]`` on X1, basis ``1, g``."""
    from .oracle import group_algebra_c2, lift_algebra

    return lift_algebra(group_algebra_c2(_field(field)))[0]


def matrix_monoid(field=None, n: int = 2):
    """``M_n(k)`` on X1, matrix units in row-major order."""
    from .oracle import lift_algebra, matrix_algebra

    return lift_algebra(matrix_algebra(_field(field), n))[0]


def ground_monoid(field=None):
    from .oracle import ground_field, lift_algebra

    return lift_algebra(ground_field(_field(field)))[0]


def graded_monoid(field=None, super_sign: bool = False):
    """On XC2 / XC2super: ``A(e) = span{1}``, ``A(g) = span{t}``, ``t*t = 1``."""
    from .functors import validate_functor
    from .monoids import validate_monoid

    cat = c2_category(field, super_sign)
    F = validate_functor(cat, {"e": 1, "g": 1}, name="A")
    prod = {(x, y): [[[1]]] for x in cat.objects for y in cat.objects}
    return validate_monoid(F, prod, [1], "k[C2]-graded")


def unit_bimodule(I, F):
    """A linear functor as a bimodule over the unit monoid ``I``.

    ``phi . m = F(phi <> id)(m)`` and ``m . phi = F(id <> phi)(m)``.
    """
    from .monoids import validate_bimodule

    cat, f = I.category, I.field
    left, right = {}, {}
    for x in cat.objects:
        for y in cat.objects:
            bx = cat.basis(cat.unit, x)
            dy = F.dims[y]
            L = f.zeros(F.dims[cat.tensor_obj(x, y)], len(bx) * dy)
            R = f.zeros(F.dims[cat.tensor_obj(y, x)], dy * len(bx))
            for i, phi in enumerate(bx):
                Lp = F.act(cat.tensor(phi, cat.identity(y)))
                Rp = F.act(cat.tensor(cat.identity(y), phi))
                for r in range(Lp.nrows()):
                    for j in range(dy):
                        L[r, i * dy + j] = Lp[r, j]
                for r in range(Rp.nrows()):
                    for j in range(dy):
                        R[r, j * len(bx) + i] = Rp[r, j]
            left[(x, y)] = L
            right[(y, x)] = R
    return validate_bimodule(I, F, left, right, F.name)


def sample_functors(category):
    """Two small functors used as coefficients over the unit monoid."""
    from .functors import validate_functor, yoneda_functor

    objs = category.objects
    if all(category.is_identity_basis(n) for n in category.all_basis_names()):
        F1 = validate_functor(category, {x: 1 for x in objs}, name="F1")
        F2 = validate_functor(category, {x: i + 2 for i, x in enumerate(objs)}, name="F2")
        return [F1, F2]
    return [yoneda_functor(category, x) for x in objs][:2]


def group_algebra_dual_numbers(field=None):
    """On XK: ``A = K[x]/(x^2)`` with ``K = k[C2]``, basis ``1, t, x, tx``.

    ``t`` acts by left multiplication.
    """
    from .functors import validate_functor
    from .monoids import validate_monoid

    cat = group_algebra_category(field)
    f = cat.field
    # basis index = 2*xpow + tpow
    T = [[0] * 4 for _ in range(4)]
    for xp in range(2):
        for tp in range(2):
            T[2 * xp + (1 - tp)][2 * xp + tp] = 1
    F = validate_functor(cat, {"1": 4}, {"t": T}, name="K[x]/(x^2)")
    mult = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            xp = a // 2 + b // 2
            if xp < 2:
                mult[a][b][2 * xp + ((a % 2) ^ (b % 2))] = 1
    return validate_monoid(F, {("1", "1"): mult}, [1, 0, 0, 0], "K[x]/(x^2)")
