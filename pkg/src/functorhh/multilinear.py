"""
Natural multilinear families ``M1(x1) x ... x Mn(xn) -> T(x1<>...<>xn)``.

A family is stored as one matrix per object tuple.  Rows are coordinates of
``T(x1<>...<>xn)``; columns enumerate basis tuples ``(i1, ..., in)`` in
mixed radix with ``i1`` most significant.  Tuples are listed
lexicographically in the category's object order, and the flat coordinates
of a family concatenate the row-major blocks in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .functors import LinearFunctor
from .linalg import Field, SubspaceBasis, full_space, kernel, zero_space


def mixed_radix(idxs: Sequence[int], radices: Sequence[int]) -> int:
    c = 0
    for i, r in zip(idxs, radices):
        c = c * r + i
    return c


def unmix(c: int, radices: Sequence[int]) -> list[int]:
    out = []
    for r in reversed(radices):
        out.append(c % r)
        c //= r
    return out[::-1]


class TupleLayout:
    """Offsets and block shapes of the flat coordinate vector."""

    def __init__(self, sources: Sequence[LinearFunctor], target: LinearFunctor):
        cat = target.category
        self.category = cat
        self.arity = len(sources)
        self.tuples = list(itertools.product(cat.objects, repeat=self.arity))
        self.blocks = {}
        off = 0
        for X in self.tuples:
            radices = tuple(M.dims[x] for M, x in zip(sources, X))
            rows = target.dims[cat.tensor_objs(*X)]
            cols = prod(radices)
            self.blocks[X] = (off, rows, cols, radices)
            off += rows * cols
        self.total = off

    def offset(self, X) -> int:
        return self.blocks[tuple(X)][0]

    def shape(self, X) -> tuple:
        _, r, c, _ = self.blocks[tuple(X)]
        return r, c

    def radices(self, X) -> tuple:
        return self.blocks[tuple(X)][3]

    def index(self, X, row: int, idxs: Sequence[int]) -> int:
        off, _, cols, rad = self.blocks[tuple(X)]
        return off + row * cols + mixed_radix(idxs, rad)


@dataclass
class MultilinearFamily:
    """One matrix per object tuple; see the module docstring for the layout."""

    space: "MultilinearSpace"
    blocks: dict

    def __getitem__(self, X):
        return self.blocks[tuple(X)]

    def evaluate(self, X, idxs: Sequence[int]) -> list:
        """Coordinates of ``f(e_{i1}, ..., e_{in})`` in the target at ``X``."""
        m = self.blocks[tuple(X)]
        c = mixed_radix(idxs, self.space.layout.radices(X))
        return [m[r, c] for r in range(m.nrows())]

    def vector(self) -> list:
        return self.space.encode(self.blocks)


class MultilinearSpace:
    """All natural families for given sources and target, as a subspace."""

    def __init__(self, sources: Sequence[LinearFunctor], target: LinearFunctor,
                 basis: SubspaceBasis | None = None):
        self.sources = tuple(sources)
        self.target = target
        self.field: Field = target.field
        self.layout = TupleLayout(self.sources, target)
        self.basis = basis if basis is not None else self._solve()

    @property
    def arity(self) -> int:
        return len(self.sources)

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def ambient(self) -> int:
        return self.layout.total

    def encode(self, blocks: dict) -> list:
        f = self.field
        out = [f.zero] * self.layout.total
        for X, (off, r, c, _) in self.layout.blocks.items():
            m = blocks.get(X)
            if m is None or r * c == 0:
                continue
            if (m.nrows(), m.ncols()) != (r, c):
                raise ValueError(f"block at {X} has shape {m.nrows()}x{m.ncols()}, expected {r}x{c}")
            out[off: off + r * c] = m.entries()
        return out

    def decode(self, vec: Sequence) -> MultilinearFamily:
        if len(vec) != self.layout.total:
            raise ValueError("vector length does not match the layout")
        f = self.field
        blocks = {}
        for X, (off, r, c, _) in self.layout.blocks.items():
            blocks[X] = f.matrix(r, c, vec[off: off + r * c])
        return MultilinearFamily(self, blocks)

    def family(self, i: int) -> MultilinearFamily:
        return self.decode(self.basis.vector(i))

    def families(self) -> list[MultilinearFamily]:
        return [self.decode(v) for v in self.basis.vectors()]

    def contains(self, vec: Sequence) -> bool:
        return self.basis.contains(vec)

    def constraint_matrix(self):
        """Naturality in each slot, one row per scalar equation."""
        cat = self.target.category
        f = self.field
        lay = self.layout
        rows = []
        for X in lay.tuples:
            off, r, c, rad = lay.blocks[X]
            if c == 0:
                continue
            for slot in range(self.arity):
                x = X[slot]
                for y in cat.objects:
                    for nm in cat.basis_names(x, y):
                        if cat.is_identity_basis(nm):
                            continue
                        phi = cat.basis_morphism(nm)
                        Y = X[:slot] + (y,) + X[slot + 1:]
                        pieces = [cat.identity(o) for o in X]
                        pieces[slot] = phi
                        Tp = self.target.act(cat.tensor_all(*pieces))
                        Mp = self.sources[slot].actions[nm]
                        rows.extend(self._square(X, Y, slot, Tp, Mp))
        m = f.zeros(len(rows), lay.total)
        for i, row in enumerate(rows):
            for j, v in row.items():
                m[i, j] = v
        return m

    def _square(self, X, Y, slot, Tp, Mp):
        """``T(phi) f_X - f_Y (1 x M(phi) x 1) = 0`` as sparse rows."""
        f = self.field
        lay = self.layout
        offX, rX, cX, radX = lay.blocks[X]
        offY, rY, cY, radY = lay.blocks[Y]
        out = []
        tp = [[(b, Tp[a, b]) for b in range(rX) if Tp[a, b] != 0] for a in range(rY)]
        for col in range(cX):
            idxs = unmix(col, radX)
            img = []
            for k in range(radY[slot]):
                v = Mp[k, idxs[slot]]
                if v != 0:
                    j = list(idxs)
                    j[slot] = k
                    img.append((mixed_radix(j, radY), v))
            for a in range(rY):
                row = {}
                for b, v in tp[a]:
                    key = offX + b * cX + col
                    row[key] = row.get(key, f.zero) + v
                for c2, v in img:
                    key = offY + a * cY + c2
                    row[key] = row.get(key, f.zero) - v
                row = {k: v for k, v in row.items() if v != 0}
                if row:
                    out.append(row)
        return out

    def _solve(self) -> SubspaceBasis:
        f = self.field
        if self.layout.total == 0:
            return zero_space(f, 0)
        cons = self.constraint_matrix()
        if cons.nrows() == 0:
            return full_space(f, self.layout.total)
        return kernel(f, cons)


def solve_multilinear_natural(sources: Sequence[LinearFunctor], target: LinearFunctor) -> MultilinearSpace:
    """Basis of every natural multilinear family ``sources -> target``."""
    if not sources:
        raise ValueError("arity 0 is handled by the caller: use the target values directly")
    cat = target.category
    for M in sources:
        if M.category is not cat:
            raise ValueError("all functors must live over one category")
    return MultilinearSpace(sources, target)
