"""
Values of the Day convolution ``A (x) A`` as explicit quotient spaces, the
multiplication ``mu``, the bimodule actions and separability witnesses.

At ``z`` the generators are triples ``(beta, i, j)`` with ``beta`` a basis
morphism ``x<>y -> z``, ``i`` a basis index of ``A(x)`` and ``j`` of
``A(y)``, over all object pairs ``(x, y)`` in lexicographic order.
Relations identify ``(beta o (phi <> psi)) (x) m (x) n`` with
``beta (x) A(phi)m (x) A(psi)n``, one slot at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .category import Morphism
from .linalg import Quotient, mat_vec, quotient_space, solve_affine, vstack
from .monoids import Monoid, MonoidMorphism


@dataclass
class DayValue:
    monoid: Monoid
    at: str
    generators: list  # (x, y, beta name, i, j)
    index: dict
    quotient: Quotient

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def gen_vector_at(self, x: str, y: str, beta: Morphism, m: Sequence, n: Sequence) -> list:
        """Generator coordinates of ``beta (x) m (x) n`` with ``m`` in ``A(x)``, ``n`` in ``A(y)``."""
        cat, f = self.monoid.category, self.monoid.field
        out = [f.zero] * self.ngens
        names = cat.basis_names(beta.source, beta.target)
        for bn, bc in zip(names, beta.coords):
            if bc == 0:
                continue
            for i, a in enumerate(m):
                if a == 0:
                    continue
                for j, b in enumerate(n):
                    if b == 0:
                        continue
                    out[self.index[(x, y, bn, i, j)]] += bc * a * b
        return out

    def class_of(self, x: str, y: str, beta: Morphism, m: Sequence, n: Sequence) -> list:
        """Quotient coordinates of ``[beta (x) m (x) n]``."""
        return self.quotient.project(self.gen_vector_at(x, y, beta, m, n))

    def lift(self, coords: Sequence) -> list:
        return self.quotient.lift(coords)


def day_value(A: Monoid, z: str) -> DayValue:
    cat, f = A.category, A.field
    gens, index = [], {}
    for x in cat.objects:
        for y in cat.objects:
            xy = cat.tensor_obj(x, y)
            for bn in cat.basis_names(xy, z):
                for i in range(A.dim(x)):
                    for j in range(A.dim(y)):
                        index[(x, y, bn, i, j)] = len(gens)
                        gens.append((x, y, bn, i, j))
    dv = DayValue(A, z, gens, index, None)
    rels = []
    for nm in cat.all_basis_names():
        if cat.is_identity_basis(nm):
            continue
        x, x2 = cat.basis_source_target(nm)
        phi = cat.basis_morphism(nm)
        for y in cat.objects:
            # first slot: phi : x -> x2, beta : x2<>y -> z
            for bn in cat.basis_names(cat.tensor_obj(x2, y), z):
                beta = cat.basis_morphism(bn)
                pre = cat.compose(beta, cat.tensor(phi, cat.identity(y)))
                for i in range(A.dim(x)):
                    m = A.basis_vector(x, i)
                    for j in range(A.dim(y)):
                        n = A.basis_vector(y, j)
                        lhs = dv.gen_vector_at(x, y, pre, m, n)
                        rhs = dv.gen_vector_at(x2, y, beta, mat_vec(A.functor.actions[nm], m), n)
                        rels.append([a - b for a, b in zip(lhs, rhs)])
            # second slot: phi : x -> x2 acting on the right factor
            for bn in cat.basis_names(cat.tensor_obj(y, x2), z):
                beta = cat.basis_morphism(bn)
                pre = cat.compose(beta, cat.tensor(cat.identity(y), phi))
                for i in range(A.dim(y)):
                    m = A.basis_vector(y, i)
                    for j in range(A.dim(x)):
                        n = A.basis_vector(x, j)
                        lhs = dv.gen_vector_at(y, x, pre, m, n)
                        rhs = dv.gen_vector_at(y, x2, beta, m, mat_vec(A.functor.actions[nm], n))
                        rels.append([a - b for a, b in zip(lhs, rhs)])
    dv.quotient = quotient_space(f, len(gens), rels)
    return dv


class DayCache:
    """Day values of one monoid, built on demand."""

    def __init__(self, A: Monoid):
        self.A = A
        self._values = {}

    def __getitem__(self, z: str) -> DayValue:
        if z not in self._values:
            self._values[z] = day_value(self.A, z)
        return self._values[z]


def _cache(A, cache):
    return cache if cache is not None else DayCache(A)


def day_map(A: Monoid, gamma: Morphism, cache: DayCache | None = None):
    """``[beta (x) m (x) n] -> [(gamma o beta) (x) m (x) n]`` on quotient coordinates."""
    cache = _cache(A, cache)
    cat, f = A.category, A.field
    src, tgt = cache[gamma.source], cache[gamma.target]
    cols = []
    for t in range(src.dim):
        g = src.lift([f.one if k == t else f.zero for k in range(src.dim)])
        img = [f.zero] * tgt.ngens
        for c, (x, y, bn, i, j) in zip(g, src.generators):
            if c == 0:
                continue
            beta = cat.compose(gamma, cat.basis_morphism(bn))
            v = tgt.gen_vector_at(x, y, beta, A.basis_vector(x, i), A.basis_vector(y, j))
            img = [a + c * b for a, b in zip(img, v)]
        cols.append(tgt.quotient.project(img))
    return f.from_columns(cols, tgt.dim) if cols else f.zeros(tgt.dim, 0)


def _on_generators(A, dv: DayValue, rows: int, fn):
    """Matrix on generator coordinates with column ``g`` equal to ``fn(generator)``."""
    f = A.field
    m = f.zeros(rows, dv.ngens)
    for t, gen in enumerate(dv.generators):
        for r, v in enumerate(fn(*gen)):
            if v != 0:
                m[r, t] = v
    return m


def day_mu(A: Monoid, z: str, cache: DayCache | None = None, check: bool = True):
    """``[beta (x) m (x) n] -> A(beta)(m n)`` from ``(A (x) A)(z)`` to ``A(z)``."""
    cache = _cache(A, cache)
    cat, f = A.category, A.field
    dv = cache[z]

    def fn(x, y, bn, i, j):
        return mat_vec(A.functor.actions[bn], A.multiply(x, y, A.basis_vector(x, i), A.basis_vector(y, j)))

    G = _on_generators(A, dv, A.dim(z), fn)
    if check and dv.quotient.relations.dim:
        R = dv.quotient.relations.matrix
        if R.nrows() and G.nrows() and not all(e == 0 for e in (G * R.transpose()).entries()):
            raise ValueError(f"mu is not well defined on the Day value at {z}")
    return G * dv.quotient.section if dv.dim and G.nrows() else f.zeros(A.dim(z), dv.dim)


def day_biaction(A: Monoid, side: str, a: Sequence, w: str, z: str, cache: DayCache | None = None):
    """Left: ``a . [beta (x) m (x) n] = [(id_w <> beta) (x) a m (x) n]`` into ``(A (x) A)(w<>z)``.

    Right: ``[beta (x) m (x) n] . a = [(beta <> id_w) (x) m (x) n a]`` into ``(A (x) A)(z<>w)``.
    """
    cache = _cache(A, cache)
    cat, f = A.category, A.field
    src = cache[z]
    if side == "left":
        tz = cat.tensor_obj(w, z)
    elif side == "right":
        tz = cat.tensor_obj(z, w)
    else:
        raise ValueError("side must be 'left' or 'right'")
    tgt = cache[tz]

    def fn(x, y, bn, i, j):
        beta = cat.basis_morphism(bn)
        m, n = A.basis_vector(x, i), A.basis_vector(y, j)
        if side == "left":
            return tgt.gen_vector_at(cat.tensor_obj(w, x), y, cat.tensor(cat.identity(w), beta),
                                     A.multiply(w, x, a, m), n)
        return tgt.gen_vector_at(x, cat.tensor_obj(y, w), cat.tensor(beta, cat.identity(w)),
                                 m, A.multiply(y, w, n, a))

    G = _on_generators(A, src, tgt.ngens, fn)
    if not (src.dim and tgt.dim):
        return f.zeros(tgt.dim, src.dim)
    return tgt.quotient.projection * G * src.quotient.section


@dataclass
class SeparabilityWitness:
    xi: list  # coordinates in (A (x) A)(1)
    sections: dict  # object -> matrix A(x) -> (A (x) A)(x)


def _centrality_rows(A: Monoid, cache: DayCache):
    cat, f = A.category, A.field
    one = cat.unit
    blocks = []
    for w in cat.objects:
        s = day_map(A, cat.symmetry(one, w), cache)
        for i in range(A.dim(w)):
            a = A.basis_vector(w, i)
            L = day_biaction(A, "left", a, w, one, cache)
            R = day_biaction(A, "right", a, w, one, cache)
            blocks.append(L - s * R)
    return blocks


def separability_witness(A: Monoid, cache: DayCache | None = None) -> SeparabilityWitness | None:
    """A central ``xi`` with ``mu(xi) = eps``, or ``None`` when none exists."""
    cache = _cache(A, cache)
    cat, f = A.category, A.field
    one = cat.unit
    dv = cache[one]
    mu = day_mu(A, one, cache)
    blocks = [mu] + _centrality_rows(A, cache)
    rhs = list(A.unit)
    for b in blocks[1:]:
        rhs += [f.zero] * b.nrows()
    sol = solve_affine(f, vstack(f, blocks, dv.dim), rhs)
    if sol is None:
        return None
    xi = sol.particular
    wit = SeparabilityWitness(xi, _sections(A, xi, cache))
    problems = check_witness(A, xi, cache)
    if problems:
        raise AssertionError("solver returned an invalid witness: " + "; ".join(problems))
    return wit


def _sections(A, xi, cache):
    one = A.category.unit
    out = {}
    f = A.field
    for x in A.category.objects:
        cols = []
        for i in range(A.dim(x)):
            L = day_biaction(A, "left", A.basis_vector(x, i), x, one, cache)
            cols.append(mat_vec(L, xi) if L.ncols() else [f.zero] * L.nrows())
        out[x] = f.from_columns(cols, cache[x].dim) if cols else f.zeros(cache[x].dim, 0)
    return out


def check_witness(A: Monoid, xi: Sequence, cache: DayCache | None = None) -> list[str]:
    """Problems with ``xi`` as a separability witness (empty when valid)."""
    cache = _cache(A, cache)
    cat, f = A.category, A.field
    one = cat.unit
    xi = [f(v) for v in xi]
    out = []
    if len(xi) != cache[one].dim:
        return ["xi has the wrong length"]
    if mat_vec(day_mu(A, one, cache), xi) != list(A.unit):
        out.append("mu(xi) != eps")
    for w, blk in zip([w for w in cat.objects for _ in range(A.dim(w))], _centrality_rows(A, cache)):
        if blk.ncols() and any(v != 0 for v in mat_vec(blk, xi)):
            out.append(f"xi is not central against A({w})")
            break
    for x, t in _sections(A, xi, cache).items():
        mu = day_mu(A, x, cache)
        if A.dim(x) and mu * t != f.identity(A.dim(x)):
            out.append(f"mu o t != id at {x}")
    return out


def transport_separability(phi: MonoidMorphism, xi_B: Sequence) -> list:
    """Push a witness for ``B`` along a surjective monoid morphism ``B -> A``."""
    B, A = phi.source, phi.target
    bad = phi.violations()
    if bad:
        raise ValueError("not a monoid morphism: " + "; ".join(str(v) for v in bad))
    if not phi.is_surjective():
        raise ValueError("the morphism is not surjective at every object")
    cb, ca = DayCache(B), DayCache(A)
    if check_witness(B, xi_B, cb):
        raise ValueError("xi_B is not a separability witness")
    cat, f = B.category, B.field
    one = cat.unit
    src, tgt = cb[one], ca[one]
    g = src.lift([f(v) for v in xi_B])
    img = [f.zero] * tgt.ngens
    for c, (x, y, bn, i, j) in zip(g, src.generators):
        if c == 0:
            continue
        m = mat_vec(phi.components[x], B.basis_vector(x, i))
        n = mat_vec(phi.components[y], B.basis_vector(y, j))
        v = tgt.gen_vector_at(x, y, cat.basis_morphism(bn), m, n)
        img = [a + c * b for a, b in zip(img, v)]
    xi_A = tgt.quotient.project(img)
    problems = check_witness(A, xi_A, ca)
    if problems:
        raise AssertionError("transported witness is invalid: " + "; ".join(problems))
    return xi_A
