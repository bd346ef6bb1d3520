"""
Finitely presented strict symmetric monoidal categories enriched in vector
spaces.

A presentation lists the objects, a total tensor table on objects, a named
basis for every hom space, and structure constants for composition, tensor of
morphisms and the symmetry.  Associator and unitors are identities; the
symmetry is genuine data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .linalg import Field


class ValidationError(ValueError):
    """Raised by the ``validate_*`` constructors; carries every violation."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations[:8])
                         + (" ..." if len(self.violations) > 8 else ""))


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple = ()
    detail: str = ""

    def __str__(self):
        w = "(" + ",".join(str(x) for x in self.witness) + ")" if self.witness else ""
        s = f"{self.axiom} failed"
        if w:
            s += f" at {w}"
        if self.detail:
            s += f": {self.detail}"
        return s


@dataclass(frozen=True)
class Morphism:
    """A linear combination of basis morphisms ``source -> target``."""

    source: str
    target: str
    coords: tuple

    def __add__(self, other: "Morphism") -> "Morphism":
        self._same_hom(other)
        return Morphism(self.source, self.target, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Morphism") -> "Morphism":
        self._same_hom(other)
        return Morphism(self.source, self.target, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Morphism(self.source, self.target, tuple(-a for a in self.coords))

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _same_hom(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("morphisms live in different hom spaces")


class CategoryPresentation:
    """A finite strict symmetric monoidal category.

    Use :func:`validate_presentation` to build one from file data; the
    constructor itself only normalizes tables.
    """

    def __init__(
        self,
        field: Field,
        objects: Sequence[str],
        unit: str,
        tensor: Mapping[tuple, str],
        hom: Mapping[tuple, Sequence[str]],
        identity: Mapping[str, Mapping[str, object]],
        compose: Mapping[tuple, Mapping[str, object]],
        tensor_mor: Mapping[tuple, Mapping[str, object]],
        symmetry: Mapping[tuple, Mapping[str, object]],
        name: str = "",
    ):
        self.field = field
        self.name = name
        self.objects = tuple(objects)
        self.unit = unit
        self._problems: list[Violation] = []
        if len(set(self.objects)) != len(self.objects):
            self._problems.append(Violation("malformed tables", (), "duplicate object names"))
        if unit not in self.objects:
            self._problems.append(Violation("malformed tables", (unit,), "unit is not an object"))
        self._tensor = {}
        for (x, y), z in tensor.items():
            self._tensor[(x, y)] = z
        self._hom = {}
        self._basis_info = {}
        for x in self.objects:
            for y in self.objects:
                names = tuple(hom.get((x, y), ()))
                self._hom[(x, y)] = names
                for i, nm in enumerate(names):
                    if nm in self._basis_info:
                        self._problems.append(Violation("malformed tables", (nm,), "basis name used twice"))
                    self._basis_info[nm] = (x, y, i)
        for key in hom:
            if key[0] not in self.objects or key[1] not in self.objects:
                self._problems.append(Violation("malformed tables", key, "hom between unknown objects"))

        self._identity = {}
        for x in self.objects:
            if x not in identity:
                self._problems.append(Violation("malformed tables", (x,), "missing identity"))
                self._identity[x] = tuple(field.zero for _ in self._hom[(x, x)])
                continue
            self._identity[x] = self._coords(x, x, identity[x], ("identity", x))

        # which basis elements are literally an identity
        self._is_identity_basis = {}
        for x in self.objects:
            c = self._identity[x]
            nz = [i for i, a in enumerate(c) if a != 0]
            if len(nz) == 1 and c[nz[0]] == 1:
                self._is_identity_basis[self._hom[(x, x)][nz[0]]] = x

        self._compose = {}
        for (g, f), expr in compose.items():
            if g not in self._basis_info or f not in self._basis_info:
                self._problems.append(Violation("malformed tables", (g, f), "unknown basis morphism"))
                continue
            fx, fy, _ = self._basis_info[f]
            gx, gy, _ = self._basis_info[g]
            if fy != gx:
                self._problems.append(Violation("malformed tables", (g, f), "composite of non-composable pair"))
                continue
            self._compose[(g, f)] = self._coords(fx, gy, expr, ("compose", g, f))
        for f, (fx, fy, _) in self._basis_info.items():
            for g, (gx, gy, _) in self._basis_info.items():
                if fy != gx or (g, f) in self._compose:
                    continue
                if g in self._is_identity_basis:
                    self._compose[(g, f)] = self._unit_vector(fx, fy, f)
                elif f in self._is_identity_basis:
                    self._compose[(g, f)] = self._unit_vector(gx, gy, g)
                else:
                    self._problems.append(Violation("malformed tables", (g, f), "missing composite"))
                    self._compose[(g, f)] = tuple(field.zero for _ in self._hom[(fx, gy)])

        self._tensor_mor = {}
        for (a, b), expr in tensor_mor.items():
            if a not in self._basis_info or b not in self._basis_info:
                self._problems.append(Violation("malformed tables", (a, b), "unknown basis morphism"))
                continue
            ax, ay, _ = self._basis_info[a]
            bx, by, _ = self._basis_info[b]
            src, tgt = self._tensor.get((ax, bx)), self._tensor.get((ay, by))
            if src is None or tgt is None:
                continue
            self._tensor_mor[(a, b)] = self._coords(src, tgt, expr, ("tensor_mor", a, b))
        for a, (ax, ay, _) in self._basis_info.items():
            for b, (bx, by, _) in self._basis_info.items():
                if (a, b) in self._tensor_mor:
                    continue
                src, tgt = self._tensor.get((ax, bx)), self._tensor.get((ay, by))
                if src is None or tgt is None:
                    continue
                if a in self._is_identity_basis and b in self._is_identity_basis:
                    self._tensor_mor[(a, b)] = self._identity.get(src, ())
                elif a in self._is_identity_basis and ax == self.unit:
                    self._tensor_mor[(a, b)] = self._unit_vector(bx, by, b)
                elif b in self._is_identity_basis and bx == self.unit:
                    self._tensor_mor[(a, b)] = self._unit_vector(ax, ay, a)
                else:
                    self._problems.append(Violation("malformed tables", (a, b), "missing tensor of morphisms"))
                    self._tensor_mor[(a, b)] = tuple(field.zero for _ in self._hom.get((src, tgt), ()))

        self._symmetry = {}
        for (x, y), expr in symmetry.items():
            if x not in self.objects or y not in self.objects:
                self._problems.append(Violation("malformed tables", (x, y), "symmetry at unknown objects"))
                continue
            xy, yx = self._tensor.get((x, y)), self._tensor.get((y, x))
            if xy is None or yx is None:
                continue
            self._symmetry[(x, y)] = self._coords(xy, yx, expr, ("symmetry", x, y))
        for x in self.objects:
            for y in self.objects:
                if (x, y) in self._symmetry:
                    continue
                xy = self._tensor.get((x, y))
                if xy is None:
                    continue
                if x == self.unit or y == self.unit:
                    self._symmetry[(x, y)] = self._identity[xy]
                else:
                    self._problems.append(Violation("malformed tables", (x, y), "missing symmetry"))
                    self._symmetry[(x, y)] = tuple(field.zero for _ in self._hom.get((xy, self._tensor.get((y, x))), ()))

    # construction helpers ---------------------------------------------------

    def _coords(self, x, y, expr, where) -> tuple:
        names = self._hom.get((x, y), ())
        out = [self.field.zero] * len(names)
        for nm, c in dict(expr).items():
            if nm not in names:
                self._problems.append(Violation("malformed tables", where, f"{nm} is not a basis element of {x}->{y}"))
                continue
            out[names.index(nm)] += self.field(c)
        return tuple(out)

    def _unit_vector(self, x, y, name) -> tuple:
        names = self._hom[(x, y)]
        return tuple(self.field.one if n == name else self.field.zero for n in names)

    # queries ----------------------------------------------------------------

    def tensor_obj(self, x: str, y: str) -> str:
        try:
            return self._tensor[(x, y)]
        except KeyError:
            raise KeyError(f"no tensor product for ({x},{y})") from None

    def tensor_objs(self, *objs: str) -> str:
        out = self.unit
        for o in objs:
            out = self.tensor_obj(out, o)
        return out

    def basis_names(self, x: str, y: str) -> tuple:
        return self._hom[(x, y)]

    def hom_dim(self, x: str, y: str) -> int:
        return len(self._hom[(x, y)])

    def basis(self, x: str, y: str) -> list[Morphism]:
        names = self._hom[(x, y)]
        return [Morphism(x, y, self._unit_vector(x, y, n)) for n in names]

    def basis_morphism(self, name: str) -> Morphism:
        if name not in self._basis_info:
            raise KeyError(f"unknown basis morphism {name!r}")
        x, y, _ = self._basis_info[name]
        return Morphism(x, y, self._unit_vector(x, y, name))

    def basis_source_target(self, name: str) -> tuple:
        x, y, _ = self._basis_info[name]
        return x, y

    def all_basis_names(self) -> list[str]:
        return [n for x in self.objects for y in self.objects for n in self._hom[(x, y)]]

    def is_identity_basis(self, name: str) -> bool:
        return name in self._is_identity_basis

    def morphism(self, x: str, y: str, expr: Mapping[str, object]) -> Morphism:
        if x not in self.objects or y not in self.objects:
            raise KeyError(f"unknown object in {x}->{y}")
        names = self._hom[(x, y)]
        out = [self.field.zero] * len(names)
        for nm, c in dict(expr).items():
            if nm not in names:
                raise KeyError(f"{nm!r} is not a basis element of {x}->{y}")
            out[names.index(nm)] += self.field(c)
        return Morphism(x, y, tuple(out))

    def zero(self, x: str, y: str) -> Morphism:
        return Morphism(x, y, tuple(self.field.zero for _ in self._hom[(x, y)]))

    def identity(self, x: str) -> Morphism:
        if x not in self.objects:
            raise KeyError(f"unknown object {x!r}")
        return Morphism(x, x, self._identity[x])

    def symmetry(self, x: str, y: str) -> Morphism:
        """``s_{x,y} : x<>y -> y<>x``."""
        return Morphism(self.tensor_obj(x, y), self.tensor_obj(y, x), self._symmetry[(x, y)])

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """``g o f``."""
        if f.target != g.source:
            raise ValueError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
        fn = self._hom[(f.source, f.target)]
        gn = self._hom[(g.source, g.target)]
        out = [self.field.zero] * len(self._hom[(f.source, g.target)])
        for i, a in enumerate(g.coords):
            if a == 0:
                continue
            for j, b in enumerate(f.coords):
                if b == 0:
                    continue
                c = a * b
                for k, e in enumerate(self._compose[(gn[i], fn[j])]):
                    if e != 0:
                        out[k] += c * e
        return Morphism(f.source, g.target, tuple(out))

    def compose_all(self, *ms: Morphism) -> Morphism:
        """``ms[0] o ms[1] o ...``."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    def tensor(self, phi: Morphism, psi: Morphism) -> Morphism:
        """``phi <> psi``."""
        src = self.tensor_obj(phi.source, psi.source)
        tgt = self.tensor_obj(phi.target, psi.target)
        pn = self._hom[(phi.source, phi.target)]
        qn = self._hom[(psi.source, psi.target)]
        out = [self.field.zero] * len(self._hom[(src, tgt)])
        for i, a in enumerate(phi.coords):
            if a == 0:
                continue
            for j, b in enumerate(psi.coords):
                if b == 0:
                    continue
                c = a * b
                for k, e in enumerate(self._tensor_mor[(pn[i], qn[j])]):
                    if e != 0:
                        out[k] += c * e
        return Morphism(src, tgt, tuple(out))

    def tensor_all(self, *ms: Morphism) -> Morphism:
        out = self.identity(self.unit)
        for m in ms:
            out = self.tensor(out, m)
        return out

    def block_symmetry(self, x: str, ys: Sequence[str]) -> Morphism:
        """``s_{x, y1<>...<>yj}`` by iterating the coherence hexagon.

        Cross-check for the direct table lookup ``symmetry(x, tensor_objs(*ys))``.
        """
        if not ys:
            return self.symmetry(x, self.unit)
        cur = self.symmetry(x, ys[0])
        done = [ys[0]]
        for y in ys[1:]:
            # s_{x, Y<>y} = (id_Y <> s_{x,y}) o (s_{x,Y} <> id_y)
            Y = self.tensor_objs(*done)
            step = self.tensor(self.identity(Y), self.symmetry(x, y))
            cur = self.compose(step, self.tensor(cur, self.identity(y)))
            done.append(y)
        return cur

    # validation ---------------------------------------------------------------

    def violations(self, limit: int | None = None) -> list[Violation]:
        out = list(self._problems)
        if out:
            return out
        out.extend(self._object_monoid_violations())
        if out:
            return out
        checks = [
            self._composition_violations,
            self._tensor_violations,
            self._symmetry_violations,
        ]
        for chk in checks:
            for v in chk():
                out.append(v)
                if limit and len(out) >= limit:
                    return out
        return out

    def _object_monoid_violations(self):
        out = []
        obs = self.objects
        for x in obs:
            for y in obs:
                z = self._tensor.get((x, y))
                if z is None:
                    out.append(Violation("tensor table total", (x, y), "missing entry"))
                elif z not in obs:
                    out.append(Violation("object set closed under tensor", (x, y), f"{z} is not an object"))
        if out:
            return out
        for x in obs:
            if self._tensor[(self.unit, x)] != x or self._tensor[(x, self.unit)] != x:
                out.append(Violation("tensor unit", (x,), "1<>x = x = x<>1 must hold strictly"))
        for x, y, z in itertools.product(obs, repeat=3):
            if self._tensor[(self._tensor[(x, y)], z)] != self._tensor[(x, self._tensor[(y, z)])]:
                out.append(Violation("tensor associativity", (x, y, z)))
        return out

    def _composition_violations(self):
        out = []
        for f, (fx, fy, _) in self._basis_info.items():
            fm = self.basis_morphism(f)
            if self.compose(self.identity(fy), fm) != fm:
                out.append(Violation("left identity", (f,)))
            if self.compose(fm, self.identity(fx)) != fm:
                out.append(Violation("right identity", (f,)))
        for x, y, z, w in itertools.product(self.objects, repeat=4):
            for f in self.basis(x, y):
                for g in self.basis(y, z):
                    gf = self.compose(g, f)
                    for h in self.basis(z, w):
                        if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                            out.append(Violation("composition associativity", (
                                self._name(h), self._name(g), self._name(f))))
        return out

    def _name(self, m: Morphism) -> str:
        names = self._hom[(m.source, m.target)]
        nz = [i for i, c in enumerate(m.coords) if c != 0]
        if len(nz) == 1 and m.coords[nz[0]] == 1:
            return names[nz[0]]
        return f"{m.source}->{m.target}"

    def _tensor_violations(self):
        out = []
        obs = self.objects
        u = self.identity(self.unit)
        for x in obs:
            for y in obs:
                if self.tensor(self.identity(x), self.identity(y)) != self.identity(self.tensor_obj(x, y)):
                    out.append(Violation("tensor of identities", (x, y)))
        names = self.all_basis_names()
        for a in names:
            am = self.basis_morphism(a)
            if self.tensor(u, am) != am or self.tensor(am, u) != am:
                out.append(Violation("strict unit on morphisms", (a,)))
        for a, b, c in itertools.product(names, repeat=3):
            am, bm, cm = (self.basis_morphism(n) for n in (a, b, c))
            if self.tensor(self.tensor(am, bm), cm) != self.tensor(am, self.tensor(bm, cm)):
                out.append(Violation("strict associativity on morphisms", (a, b, c)))
        # interchange: (phi' o phi) <> (psi' o psi) = (phi' <> psi') o (phi <> psi)
        for a, a2 in self._composable_pairs():
            for b, b2 in self._composable_pairs():
                lhs = self.tensor(self.compose(a2, a), self.compose(b2, b))
                rhs = self.compose(self.tensor(a2, b2), self.tensor(a, b))
                if lhs != rhs:
                    out.append(Violation("tensor functoriality", (
                        self._name(a2), self._name(a), self._name(b2), self._name(b))))
        return out

    def _composable_pairs(self):
        for x, y, z in itertools.product(self.objects, repeat=3):
            for f in self.basis(x, y):
                for g in self.basis(y, z):
                    yield f, g

    def _symmetry_violations(self):
        out = []
        obs = self.objects
        for x in obs:
            for y in obs:
                xy = self.tensor_obj(x, y)
                ss = self.compose(self.symmetry(y, x), self.symmetry(x, y))
                if ss != self.identity(xy):
                    out.append(Violation("symmetry involution", (x, y), "s o s != id"))
            if self.symmetry(x, self.unit) != self.identity(x) or self.symmetry(self.unit, x) != self.identity(x):
                out.append(Violation("symmetry unit", (x,), "s_{x,1} = id_x = s_{1,x}"))
        # naturality s_{x',y'} o (phi <> psi) = (psi <> phi) o s_{x,y}
        for x, x2, y, y2 in itertools.product(obs, repeat=4):
            for phi in self.basis(x, x2):
                for psi in self.basis(y, y2):
                    lhs = self.compose(self.symmetry(x2, y2), self.tensor(phi, psi))
                    rhs = self.compose(self.tensor(psi, phi), self.symmetry(x, y))
                    if lhs != rhs:
                        out.append(Violation("symmetry naturality", (self._name(phi), self._name(psi))))
        # s_{x<>y,z} = (s_{x,z} <> id_y) o (id_x <> s_{y,z})
        for x, y, z in itertools.product(obs, repeat=3):
            lhs = self.symmetry(self.tensor_obj(x, y), z)
            rhs = self.compose(
                self.tensor(self.symmetry(x, z), self.identity(y)),
                self.tensor(self.identity(x), self.symmetry(y, z)),
            )
            if lhs != rhs:
                out.append(Violation("symmetry coherence", (x, y, z)))
        return out

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<CategoryPresentation{nm} over {self.field}: objects {list(self.objects)}>"


def _split_pair(key: str) -> tuple:
    k = key.strip()
    if k.startswith("(") and k.endswith(")"):
        k = k[1:-1]
    parts = [p.strip() for p in k.split(",")]
    return tuple(parts)


def _parse_hom_key(key: str) -> tuple:
    if "->" not in key:
        raise ValueError(f"hom key {key!r} must look like 'x->y'")
    x, y = key.split("->", 1)
    return x.strip(), y.strip()


def presentation_from_raw(raw: Mapping, name: str = "") -> CategoryPresentation:
    """Parse the JSON category format without checking axioms."""
    try:
        field = Field.parse(raw.get("field", "Q"))
        objects = list(raw["objects"])
        unit = raw.get("unit", objects[0] if objects else None)
        tensor = {}
        for item in raw["tensor"]:
            x, y, z = item
            tensor[(x, y)] = z
        hom = {}
        for key, names in raw.get("hom", {}).items():
            hom[_parse_hom_key(key)] = list(names)
        identity = dict(raw.get("identity", {}))
        # single-element endomorphism bases named like id_x may omit identity
        for x in objects:
            if x not in identity:
                names = hom.get((x, x), [])
                if len(names) == 1:
                    identity[x] = {names[0]: 1}
        compose = {_split_pair(k): v for k, v in raw.get("compose", {}).items()}
        tensor_mor = {_split_pair(k): v for k, v in raw.get("tensor_mor", {}).items()}
        symmetry = {_split_pair(k): v for k, v in raw.get("symmetry", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError([Violation("malformed tables", (), str(exc))]) from exc
    return CategoryPresentation(field, objects, unit, tensor, hom, identity, compose, tensor_mor, symmetry, name)


def validate_presentation(raw: Mapping | CategoryPresentation, name: str = "") -> CategoryPresentation:
    """Parse (if needed) and check every axiom; raise :class:`ValidationError`."""
    cat = raw if isinstance(raw, CategoryPresentation) else presentation_from_raw(raw, name)
    bad = cat.violations()
    if bad:
        raise ValidationError(bad)
    return cat


def presentation_to_raw(cat: CategoryPresentation) -> dict:
    f = cat.field

    def expr(x, y, coords):
        names = cat.basis_names(x, y)
        return {n: f.format(c) for n, c in zip(names, coords) if c != 0}

    out = {
        "field": str(f),
        "objects": list(cat.objects),
        "unit": cat.unit,
        "tensor": [[x, y, cat.tensor_obj(x, y)] for x in cat.objects for y in cat.objects],
        "hom": {f"{x}->{y}": list(cat.basis_names(x, y)) for x in cat.objects for y in cat.objects
                if cat.hom_dim(x, y)},
        "identity": {x: expr(x, x, cat.identity(x).coords) for x in cat.objects},
        "compose": {},
        "tensor_mor": {},
        "symmetry": {},
    }
    for (g, fn), c in cat._compose.items():
        fx, _ = cat.basis_source_target(fn)
        _, gy = cat.basis_source_target(g)
        out["compose"][f"({g},{fn})"] = expr(fx, gy, c)
    for (a, b), c in cat._tensor_mor.items():
        ax, ay = cat.basis_source_target(a)
        bx, by = cat.basis_source_target(b)
        out["tensor_mor"][f"({a},{b})"] = expr(cat.tensor_obj(ax, bx), cat.tensor_obj(ay, by), c)
    for x in cat.objects:
        for y in cat.objects:
            s = cat.symmetry(x, y)
            out["symmetry"][f"({x},{y})"] = expr(s.source, s.target, s.coords)
    return out
