"""
Command-line front end: ``functorhh <command> [options]``.

Exit codes: 0 on success, 1 when an input fails an axiom check (or a
requested verdict is negative), 2 when a file cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as fio
from .category import ValidationError, presentation_to_raw
from .complexes import ComplexError
from .linalg import Field, LinalgError

EXIT_OK, EXIT_INVALID, EXIT_PARSE = 0, 1, 2


class Failure(Exception):
    """A negative verdict; reported with exit code 1."""


# ---------------------------------------------------------------------------
# helpers


def _emit(args, doc: dict, lines: list[str]):
    if args.format == "json":
        sys.stdout.write(fio.dump_json(doc))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _vec(field, v):
    return [field.format(x) for x in v]


def _monoid(args):
    return fio.load_monoid(args.monoid)


def _objects(A, at: str):
    if at == "all":
        return list(A.category.objects)
    if at not in A.category.objects:
        raise fio.FormatError(f"unknown object {at!r}")
    return [at]


def _complex(A, M):
    from .hochschild import HochschildComplex

    return HochschildComplex(A, M)


def _named_algebra(name: str, field: Field):
    from . import oracle

    table = {
        "ground": oracle.ground_field,
        "dual": oracle.dual_numbers,
        "c2": oracle.group_algebra_c2,
        "m2": lambda f: oracle.matrix_algebra(f, 2),
        "upper": lambda f: oracle.triangular_subalgebra(f, "upper"),
    }
    if name not in table:
        raise fio.FormatError(f"unknown named algebra {name!r}; choose from {', '.join(table)}")
    return table[name](field)


def _algebra(args):
    from .oracle import random_algebra

    field = Field.parse(args.field)
    given = [a for a in (args.algebra, args.named, args.random) if a is not None]
    if len(given) != 1:
        raise fio.FormatError("give exactly one of --algebra, --named, --random")
    if args.algebra is not None:
        return fio.load_algebra(args.algebra)
    if args.named is not None:
        return _named_algebra(args.named, field)
    return random_algebra(args.random, field)


def _table_lines(title: str, objs, dims: dict, top: int) -> list[str]:
    width = max([len("object")] + [len(x) for x in objs])
    head = "object".ljust(width) + "".join(f"  {n:>3}" for n in range(top + 1))
    out = [title, head]
    for x in objs:
        out.append(x.ljust(width) + "".join(f"  {d:>3}" for d in dims[x]))
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args):
    raw = fio.load_json(args.file)
    path = Path(args.file)
    kind = args.kind
    if kind == "auto":
        if "objects" in raw:
            kind = "category"
        elif "mult" in raw:
            kind = "algebra"
        elif "degree" in raw:
            kind = "cocycle"
        elif "product" in raw:
            kind = "monoid"
        elif "left" in raw or "right" in raw:
            kind = "bimodule"
        elif "values" in raw:
            kind = "functor"
        else:
            raise fio.FormatError(f"cannot tell what kind of document {path} is")
    summary = {}
    if kind == "category":
        cat = fio.validate_presentation(raw, path.stem)
        summary = {"objects": list(cat.objects), "field": str(cat.field),
                   "morphisms": len(cat.all_basis_names())}
    elif kind == "functor":
        cat = fio._category(raw, path.parent)
        F = fio.functor_from_raw(cat, raw, path.stem)
        summary = {"values": dict(F.dims)}
    elif kind == "monoid":
        A = fio.monoid_from_raw(raw, path.parent, {})
        summary = {"values": dict(A.functor.dims), "commutative": A.is_commutative()}
    elif kind == "bimodule":
        if not args.monoid:
            raise fio.FormatError("validating a bimodule needs --monoid")
        A = _monoid(args)
        M = fio.bimodule_from_raw(A, raw)
        summary = {"values": dict(M.functor.dims), "two-sided": M.right is not None}
    elif kind == "cocycle":
        if not args.monoid:
            raise fio.FormatError("validating a cocycle needs --monoid")
        A = _monoid(args)
        hc = _complex(A, fio.load_bimodule(A, args.bimodule))
        c = fio.cochain_from_raw(hc, raw)
        summary = {"degree": c.degree, "at": c.at, "cocycle": c.is_cocycle()}
        if not c.is_cocycle():
            raise ValidationError([fio.Violation("cocycle condition", (c.at,), "beta f != 0")])
    elif kind == "algebra":
        alg = fio.algebra_from_raw(raw)
        summary = {"dim": alg.dim, "module_dim": alg.module_dim, "field": str(alg.field)}
    doc = {"command": "validate", "file": str(args.file), "kind": kind, "valid": True, **summary}
    _emit(args, doc, [f"valid {kind}: {args.file}"] + [f"  {k}: {v}" for k, v in summary.items()])


def cmd_hh(args):
    from .hochschild import hh_compute

    A = _monoid(args)
    M = fio.load_bimodule(A, args.bimodule)
    hc = _complex(A, M)
    objs = _objects(A, args.at)
    rep = hh_compute(A, M, args.max_degree, objs, complex_=hc)
    dims = {str(n): {x: rep.dims[x][n] for x in objs} for n in range(args.max_degree + 1)}
    doc = {"command": "hh", "field": str(A.field), "max_degree": args.max_degree, "dims": dims,
           "cochain_dims": {x: rep.cochain_dims[x][: args.max_degree + 1] for x in objs}}
    lines = _table_lines(f"HH^n dimensions over {A.field}", objs, rep.dims, args.max_degree)
    if args.representatives:
        reps = {}
        for n in range(args.max_degree + 1):
            reps[str(n)] = {}
            for x in objs:
                cs = [hc.cochain_from_coordinates(n, x, r) for r in rep.groups[x][n].representatives]
                reps[str(n)][x] = [fio.cochain_to_raw(c) for c in cs]
                for k, c in enumerate(cs):
                    lines.append(f"rep HH^{n}({x})[{k}]: " + fio.json.dumps(fio.cochain_to_raw(c)["components"]))
        doc["representatives"] = reps
    _emit(args, doc, lines)


def cmd_commutant(args):
    from .hochschild import commutant

    A = _monoid(args)
    M = fio.load_bimodule(A, args.bimodule)
    f = A.field
    doc = {"command": "commutant", "field": str(f), "commutant": {}}
    lines = []
    for x in _objects(A, args.at):
        B = commutant(A, M, x)
        vecs = [_vec(f, v) for v in B.vectors()]
        doc["commutant"][x] = {"dim": B.dim, "basis": vecs}
        lines.append(f"CM({x}): dim {B.dim}")
        lines += [f"  {v}" for v in vecs]
    _emit(args, doc, lines)


def cmd_derivations(args):
    from .hochschild import derivation_spaces

    A = _monoid(args)
    M = fio.load_bimodule(A, args.bimodule)
    doc = {"command": "derivations", "field": str(A.field), "derivations": {}}
    lines = []
    for x in _objects(A, args.at):
        r = derivation_spaces(A, M, x)
        der, inn, hh1 = r.dims
        doc["derivations"][x] = {"der": der, "inn": inn, "hh1": hh1}
        lines.append(f"{x}: Der {der}, Inn {inn}, HH^1 {hh1}")
    _emit(args, doc, lines)


def cmd_separability(args):
    from .day import DayCache, separability_witness

    A = _monoid(args)
    f, cat = A.field, A.category
    cache = DayCache(A)
    w = separability_witness(A, cache)
    dv = cache[cat.unit]
    doc = {"command": "separability", "field": str(f), "day_dim": dv.dim, "separable": w is not None}
    if w is None:
        _emit(args, doc, [f"(A(x)A)(1) has dim {dv.dim}; no separability witness exists"])
        return
    terms = []
    for c, (x, y, bn, i, j) in zip(dv.lift(w.xi), dv.generators):
        if c != 0:
            terms.append({"coefficient": f.format(c), "x": x, "y": y, "morphism": bn, "i": i, "j": j})
    doc["xi"] = _vec(f, w.xi)
    doc["xi_terms"] = terms
    lines = [f"(A(x)A)(1) has dim {dv.dim}; separable", f"xi = {doc['xi']}"]
    lines += [f"  {t['coefficient']} * [{t['morphism']} (x) e{t['i']}@{t['x']} (x) e{t['j']}@{t['y']}]"
              for t in terms]
    _emit(args, doc, lines)


def _two_cocycles(args, hc_first, hc_second):
    if not args.cocycle or len(args.cocycle) != 2:
        raise fio.FormatError("give --cocycle twice")
    return fio.load_cochain(hc_first, args.cocycle[0]), fio.load_cochain(hc_second, args.cocycle[1])


def _class_doc(hc, c):
    from .hochschild import cohomology_group

    H = cohomology_group(hc, c.degree, c.at)
    return _vec(hc.field, H.coordinates(c.coordinates())) if c.is_cocycle() else None


def cmd_cup(args):
    from .products import cup_product

    A = _monoid(args)
    M = fio.load_bimodule(A, args.bimodule)
    hA, hM = _complex(A, None), _complex(A, M)
    f, g = _two_cocycles(args, hA, hM)
    p = cup_product(f, g, hM)
    doc = {"command": "cup", "product": fio.cochain_to_raw(p), "cocycle": p.is_cocycle(),
           "class": _class_doc(hM, p)}
    _emit(args, doc, [f"cup product in degree {p.degree} at {p.at}; cocycle: {p.is_cocycle()}",
                      "class coordinates: " + str(doc["class"]),
                      fio.json.dumps(doc["product"]["components"])])


def cmd_bracket(args):
    from .products import bracket_deg1, is_inner

    A = _monoid(args)
    hA = _complex(A, None)
    d, e = _two_cocycles(args, hA, hA)
    b = bracket_deg1(d, e)
    doc = {"command": "bracket", "bracket": fio.cochain_to_raw(b), "derivation": b.is_cocycle(),
           "inner": is_inner(b)}
    _emit(args, doc, [f"[d, e] at {b.at}; derivation: {doc['derivation']}; inner: {doc['inner']}",
                      fio.json.dumps(doc["bracket"]["components"])])


def _extension(args, path):
    from .extensions import extension_from_cocycle

    A = _monoid(args)
    hc = _complex(A, fio.load_bimodule(A, args.bimodule))
    return hc, extension_from_cocycle(fio.load_cochain(hc, path))


def cmd_extension(args):
    from .extensions import extension_equivalence, extension_from_cocycle, zero_cocycle

    if not args.cocycle or len(args.cocycle) != 1:
        raise fio.FormatError("give --cocycle once")
    hc, E = _extension(args, args.cocycle[0])
    x = E.cocycle.at
    E0 = extension_from_cocycle(zero_cocycle(hc, x))
    split = extension_equivalence(E, E0, hc, x) is not None
    doc = {"command": "extension", "at": x, "split": split,
           "unit_element": _vec(hc.field, E.total.unit), "monoid": fio.monoid_to_raw(E.total)}
    _emit(args, doc, [f"E_f over {x}: valid monoid with values {dict(E.total.functor.dims)}",
                      f"unit element {doc['unit_element']}",
                      "equivalent to the semidirect product" if split else "not split"])


def cmd_baer_sum(args):
    from .extensions import baer_sum, extension_equivalence, extension_from_cocycle

    if not args.cocycle or len(args.cocycle) != 2:
        raise fio.FormatError("give --cocycle twice")
    hc, E1 = _extension(args, args.cocycle[0])
    _, E2 = _extension(args, args.cocycle[1])
    if E1.cocycle.at != E2.cocycle.at:
        raise fio.FormatError("cocycles live at different objects")
    x = E1.cocycle.at
    S = baer_sum(E1, E2)
    Esum = extension_from_cocycle(E1.cocycle + E2.cocycle)
    ok = extension_equivalence(S, Esum, hc, x) is not None
    doc = {"command": "baer-sum", "at": x, "equivalent_to_sum_cocycle": ok,
           "monoid": fio.monoid_to_raw(S.total)}
    _emit(args, doc, [f"Baer sum over {x}: values {dict(S.total.functor.dims)}",
                      f"equivalent to E_(f+g): {ok}"])
    if not ok:
        raise Failure("Baer sum is not equivalent to E_(f+g)")


def cmd_semidirect(args):
    from .extensions import semidirect_product

    A = _monoid(args)
    M = fio.load_bimodule(A, args.bimodule)
    E = semidirect_product(M)
    doc = {"command": "semidirect", "monoid": fio.monoid_to_raw(E)}
    _emit(args, doc, [f"{M.name} x| A: values {dict(E.functor.dims)}", fio.dump_json(doc["monoid"]).rstrip()])


def cmd_les(args):
    from .hochschild import hochschild_les
    from .monoids import direct_sum_inclusions

    A = _monoid(args)
    K = fio.load_bimodule(A, args.kernel)
    N = fio.load_bimodule(A, args.quotient)
    _, inj, proj = direct_sum_inclusions(K, N)
    doc = {"command": "les", "max_degree": args.max_degree, "les": {}}
    lines = []
    exact = True
    for x in _objects(A, args.at):
        r = hochschild_les(inj, proj, x, args.max_degree)
        exact &= r.exact
        doc["les"][x] = {"dims_K": r.dims_K[: args.max_degree + 1], "dims_M": r.dims_M, "dims_N": r.dims_N,
                         "junctions": [[lab, ok] for lab, ok in r.junctions], "exact": r.exact}
        lines.append(f"{x}: K {r.dims_K[: args.max_degree + 1]}, K+N {r.dims_M}, N {r.dims_N}; "
                     f"exact: {r.exact}")
        lines += [f"  {lab}: {'exact' if ok else 'NOT exact'}" for lab, ok in r.junctions]
    doc["exact"] = exact
    _emit(args, doc, lines)
    if not exact:
        raise Failure("long exact sequence fails at some junction")


def cmd_oracle(args):
    from .oracle import classical_hh

    alg = _algebra(args)
    dims = classical_hh(alg, args.max_degree)
    doc = {"command": "oracle", "algebra": alg.name, "field": str(alg.field), "dims": dims}
    _emit(args, doc, [f"classical HH of {alg.name or 'algebra'} over {alg.field}: {dims}"])


def cmd_crosscheck(args):
    from .oracle import crosscheck

    alg = _algebra(args)
    v = crosscheck(alg, args.max_degree)
    doc = {"command": "crosscheck", "algebra": alg.name, "field": str(alg.field), "ok": v.ok,
           "classical": v.classical, "engine": v.engine, "first_divergence": v.first_divergence}
    _emit(args, doc, [f"{alg.name or 'algebra'} over {alg.field}: {v}"])
    if not v.ok:
        raise Failure(str(v))


def cmd_fixtures(args):
    """Write the built-in fixtures as JSON documents."""
    from . import fixtures as fx
    from .oracle import dual_numbers, matrix_algebra

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    f = Field.parse(args.field)
    written = []

    def put(name, doc):
        fio.dump_json(doc, out / name)
        written.append(name)

    cats = {"x1.json": fx.trivial_category(f), "xc2.json": fx.c2_category(f),
            "xc2super.json": fx.c2_category(f, True), "xk.json": fx.group_algebra_category(f)}
    for name, cat in cats.items():
        put(name, presentation_to_raw(cat))
    monoids = [("dual.json", "x1.json", fx.dual_numbers_monoid(f)),
               ("c2.json", "x1.json", fx.group_algebra_monoid(f)),
               ("m2.json", "x1.json", fx.matrix_monoid(f)),
               ("graded.json", "xc2.json", fx.graded_monoid(f)),
               ("graded_super.json", "xc2super.json", fx.graded_monoid(f, True)),
               ("xk_dual.json", "xk.json", fx.group_algebra_dual_numbers(f))]
    for name, cref, A in monoids:
        put(name, fio.monoid_to_raw(A, cref))
    put("alg_dual.json", fio.algebra_to_raw(dual_numbers(f)))
    put("alg_m2.json", fio.algebra_to_raw(matrix_algebra(f, 2)))
    from .hochschild import HochschildComplex, cohomology_group

    hc = HochschildComplex(monoids[0][2])
    for n in (1, 2):
        (o,) = hc.category.objects
        reps = cohomology_group(hc, n, o).representatives
        put(f"dual_cocycle{n}.json", fio.cochain_to_raw(hc.cochain_from_coordinates(n, o, reps[0])))
    broken = presentation_to_raw(fx.c2_category(f))
    broken["symmetry"] = {"(g,g)": {"id_e": 2}}
    put("broken_category.json", broken)
    _emit(args, {"command": "fixtures", "written": written}, [f"wrote {n}" for n in written])


COMMANDS = {
    "validate": cmd_validate, "hh": cmd_hh, "commutant": cmd_commutant, "derivations": cmd_derivations,
    "separability": cmd_separability, "cup": cmd_cup, "bracket": cmd_bracket, "extension": cmd_extension,
    "baer-sum": cmd_baer_sum, "semidirect": cmd_semidirect, "les": cmd_les, "oracle": cmd_oracle,
    "crosscheck": cmd_crosscheck, "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="functorhh",
                                description="Hochschild cohomology of monoids in linear functor categories.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, monoid=True, bimodule=False, at=False, degree=False, cocycles=False):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
        if monoid:
            s.add_argument("--monoid", required=True, help="monoid file")
        if bimodule:
            s.add_argument("--bimodule", default="self", help="bimodule file, or 'self'")
        if at:
            s.add_argument("--at", default="all", help="object name or 'all'")
        if degree:
            s.add_argument("--max-degree", type=int, default=3)
        if cocycles:
            s.add_argument("--cocycle", action="append", help="cocycle file (repeatable)")
        return s

    v = add("validate", "check every axiom of a document", monoid=False)
    v.add_argument("file")
    v.add_argument("--kind", default="auto",
                   choices=["auto", "category", "functor", "monoid", "bimodule", "cocycle", "algebra"])
    v.add_argument("--monoid", help="monoid file (for bimodules and cocycles)")
    v.add_argument("--bimodule", default="self", help="coefficients of a cocycle")

    h = add("hh", "Hochschild cohomology dimensions", bimodule=True, at=True, degree=True)
    h.add_argument("--representatives", action="store_true")
    add("commutant", "the commutant HH^0", bimodule=True, at=True)
    add("derivations", "derivations, inner derivations and HH^1", bimodule=True, at=True)
    add("separability", "search for a separability witness")
    add("cup", "cup product of two cochains", bimodule=True, cocycles=True)
    add("bracket", "bracket of two 1-cocycles", cocycles=True)
    add("extension", "square-zero extension of a 2-cocycle", bimodule=True, cocycles=True)
    add("baer-sum", "Baer sum of two extensions", bimodule=True, cocycles=True)
    add("semidirect", "semidirect product with a bimodule", bimodule=True)
    le = add("les", "long exact sequence of a split sequence K -> K+N -> N", at=True, degree=True)
    le.add_argument("--kernel", default="self", help="bimodule K, or 'self'")
    le.add_argument("--quotient", default="self", help="bimodule N, or 'self'")
    for name, help_ in (("oracle", "classical Hochschild cohomology of an algebra"),
                        ("crosscheck", "compare the classical and functorial pipelines")):
        s = add(name, help_, monoid=False, degree=True)
        s.add_argument("--algebra", help="algebra file")
        s.add_argument("--named", help="ground, dual, c2, m2 or upper")
        s.add_argument("--random", type=int, help="seed of a random algebra")
        s.add_argument("--field", default="Q")
    fx = add("fixtures", "write the built-in fixtures as JSON files", monoid=False)
    fx.add_argument("outdir")
    fx.add_argument("--field", default="Q")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        COMMANDS[args.command](args)
    except ValidationError as exc:
        for v in exc.violations:
            print(f"error: {v}", file=sys.stderr)
        return EXIT_INVALID
    except (Failure, ComplexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (fio.FormatError, LinalgError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
