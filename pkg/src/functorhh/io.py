"""
JSON file formats for categories, functors, monoids, bimodules, cocycles,
algebras and reports.

Scalars are bare integers or ``"p/q"`` strings over Q, and integers in
``[0, p)`` over GF(p).  Matrices are lists of rows, rows indexed by target
coordinates.  A ``category`` entry in a functor-like file is either an
inline category document or a path relative to the referencing file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .category import (
    CategoryPresentation,
    ValidationError,
    Violation,
    presentation_to_raw,
    validate_presentation,
)
from .functors import LinearFunctor, validate_functor
from .hochschild import Cochain, HochschildComplex
from .linalg import Field
from .monoids import Bimodule, Monoid, regular_bimodule, table_to_nested, validate_bimodule, validate_monoid
from .oracle import AlgebraRep, algebra


class FormatError(ValueError):
    """A file is unreadable or does not follow the expected layout."""


def load_json(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def _layout(obj, ind: int) -> str:
    # objects and nested lists are indented; lists of scalars stay on one line
    pad, inner = " " * ind, " " * (ind + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_layout(v, ind + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return json.dumps(list(obj))
        return "[\n" + ",\n".join(inner + _layout(v, ind + 2) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj)


def dump_json(doc, path=None) -> str:
    text = _layout(doc, 0) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def parse_tuple(key: str) -> tuple:
    k = key.strip()
    if k.startswith("(") and k.endswith(")"):
        k = k[1:-1]
    k = k.strip()
    if not k:
        return ()
    return tuple(p.strip() for p in k.split(","))


def format_tuple(t) -> str:
    return "(" + ",".join(t) + ")"


def matrix_to_rows(field: Field, m) -> list:
    return [[field.format(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]


def rows_to_matrix(field: Field, rows, nrows: int, ncols: int, what: str = "matrix"):
    rows = list(rows)
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise FormatError(f"{what} should be {nrows}x{ncols}")
    return field.matrix(nrows, ncols, [v for r in rows for v in r])


# ---------------------------------------------------------------------------
# categories and functors


def _category(raw: Mapping, base: Path | None, cache: dict | None = None) -> CategoryPresentation:
    ref = raw.get("category")
    if ref is None:
        raise FormatError("missing 'category' entry")
    if isinstance(ref, Mapping):
        return validate_presentation(ref)
    path = (base / ref) if base is not None else Path(ref)
    key = str(path.resolve())
    if cache is not None and key in cache:
        return cache[key]
    cat = validate_presentation(load_json(path), path.stem)
    if cache is not None:
        cache[key] = cat
    return cat


def load_category(path) -> CategoryPresentation:
    return validate_presentation(load_json(path), Path(path).stem)


def functor_from_raw(cat: CategoryPresentation, raw: Mapping, name: str = "") -> LinearFunctor:
    f = cat.field
    dims = {str(k): int(v) for k, v in raw.get("values", {}).items()}
    maps = {}
    for nm, rows in raw.get("maps", {}).items():
        if nm not in cat.all_basis_names():
            raise ValidationError([Violation("malformed tables", (nm,), "unknown basis morphism")])
        x, y = cat.basis_source_target(nm)
        maps[nm] = rows_to_matrix(f, rows, dims.get(y, 0), dims.get(x, 0), f"map {nm}")
    return validate_functor(cat, dims, maps, name)


def functor_to_raw(F: LinearFunctor, category_ref=None) -> dict:
    cat, f = F.category, F.field
    out = {}
    if category_ref is not None:
        out["category"] = category_ref
    out["values"] = {x: F.dims[x] for x in cat.objects}
    maps = {}
    for nm in cat.all_basis_names():
        if cat.is_identity_basis(nm):
            continue
        m = F.actions[nm]
        if m.nrows() and m.ncols():
            maps[nm] = matrix_to_rows(f, m)
    out["maps"] = maps
    return out


def _tables_from_raw(raw: Mapping) -> dict:
    return {parse_tuple(k): v for k, v in raw.items()}


def monoid_from_raw(raw: Mapping, base: Path | None = None, cache: dict | None = None) -> Monoid:
    cat = _category(raw, base, cache)
    F = functor_from_raw(cat, raw, raw.get("name", ""))
    if "product" not in raw or "unit_element" not in raw:
        raise FormatError("a monoid file needs 'product' and 'unit_element'")
    return validate_monoid(F, _tables_from_raw(raw["product"]), raw["unit_element"], raw.get("name", ""))


def monoid_to_raw(A: Monoid, category_ref=None) -> dict:
    cat, f = A.category, A.field
    out = functor_to_raw(A.functor, category_ref if category_ref is not None else presentation_to_raw(cat))
    if A.name:
        out = {"name": A.name, **out}
    out["product"] = {format_tuple((x, y)): table_to_nested(f, A.product[(x, y)], A.dim(x), A.dim(y))
                      for x in cat.objects for y in cat.objects if A.dim(x) and A.dim(y)}
    out["unit_element"] = [f.format(v) for v in A.unit]
    return out


def load_monoid(path) -> Monoid:
    p = Path(path)
    return monoid_from_raw(load_json(p), p.parent, {})


def bimodule_from_raw(A: Monoid, raw: Mapping) -> Bimodule:
    F = functor_from_raw(A.category, raw, raw.get("name", "M"))
    left = _tables_from_raw(raw.get("left", {}))
    right = _tables_from_raw(raw["right"]) if "right" in raw else None
    return validate_bimodule(A, F, left, right, raw.get("name", "M"))


def bimodule_to_raw(M: Bimodule) -> dict:
    A = M.monoid
    cat, f = A.category, A.field
    out = functor_to_raw(M.functor)
    out = {"name": M.name, **out}
    out["left"] = {format_tuple((x, y)): table_to_nested(f, M.left[(x, y)], A.dim(x), M.dim(y))
                   for x in cat.objects for y in cat.objects if A.dim(x) and M.dim(y)}
    if M.right is not None:
        out["right"] = {format_tuple((y, x)): table_to_nested(f, M.right[(y, x)], M.dim(y), A.dim(x))
                        for x in cat.objects for y in cat.objects if A.dim(x) and M.dim(y)}
    return out


def load_bimodule(A: Monoid, source: str | None) -> Bimodule:
    """``None`` or ``"self"`` gives ``A`` over itself."""
    if source is None or source == "self":
        return regular_bimodule(A)
    return bimodule_from_raw(A, load_json(source))


# ---------------------------------------------------------------------------
# cocycles


def cochain_from_raw(hc: HochschildComplex, raw: Mapping) -> Cochain:
    try:
        n = int(raw["degree"])
        x = str(raw["at"])
        comps = raw["components"]
    except KeyError as exc:
        raise FormatError(f"cocycle file lacks {exc}") from None
    if x not in hc.category.objects:
        raise FormatError(f"unknown object {x!r}")
    sp = hc.space(n, x)
    f = hc.field
    blocks = {}
    for key, rows in comps.items():
        X = parse_tuple(key)
        if X not in sp.layout.blocks:
            raise FormatError(f"component {key} is not an object tuple of length {n}")
        r, c = sp.layout.shape(X)
        blocks[X] = rows_to_matrix(f, rows, r, c, f"component {key}")
    vec = sp.encode(blocks)
    if not sp.contains(vec):
        raise ValidationError([Violation("naturality", (), "cochain is not a natural family")])
    return Cochain(hc, n, x, vec)


def cochain_to_raw(c: Cochain) -> dict:
    sp = c.space
    f = c.complex.field
    fam = sp.decode(c.vector)
    comps = {}
    for X in sp.layout.tuples:
        r, cc = sp.layout.shape(X)
        if r * cc:
            comps[format_tuple(X)] = matrix_to_rows(f, fam[X])
    return {"degree": c.degree, "at": c.at, "components": comps}


def load_cochain(hc: HochschildComplex, path) -> Cochain:
    return cochain_from_raw(hc, load_json(path))


# ---------------------------------------------------------------------------
# algebras


def algebra_from_raw(raw: Mapping) -> AlgebraRep:
    try:
        f = Field.parse(raw.get("field", "Q"))
        mult = raw["mult"]
        unit = raw["unit"]
    except KeyError as exc:
        raise FormatError(f"algebra file lacks {exc}") from None
    bm = raw.get("bimodule")
    try:
        if bm is None:
            return algebra(f, mult, unit, name=raw.get("name", ""))
        return algebra(f, mult, unit, bm["left"], bm["right"], name=raw.get("name", ""))
    except ValueError as exc:
        raise ValidationError([Violation("algebra axioms", (), str(exc))]) from exc


def algebra_to_raw(alg: AlgebraRep) -> dict:
    f = alg.field
    fmt = lambda a: [[[f.format(v) for v in r] for r in m] for m in a.tolist()]
    out = {"name": alg.name, "field": str(f), "dim": alg.dim, "mult": fmt(alg.mult),
           "unit": [f.format(u) for u in alg.unit]}
    if alg.left is not None:
        out["bimodule"] = {"dim": alg.module_dim, "left": fmt(alg.left), "right": fmt(alg.right)}
    return out


def load_algebra(path) -> AlgebraRep:
    return algebra_from_raw(load_json(path))
