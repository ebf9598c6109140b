"""Command line front end: ``rmotivic <command> ...``.

Exit status is 0 on success, 1 when a verification fails (or two modules
are not isomorphic) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import a1catalog, coefficients, dual, fixtures, fmodule, milnor

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, text_lines, payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for line in text_lines:
            print(line)


# -- dual Steenrod algebra


def cmd_conjugate(args) -> int:
    x = dual.conjugate(dual.parse(args.expr))
    _emit(args, [dual.render(x)], {"result": dual.render(x)})
    return OK


def cmd_coproduct(args) -> int:
    x = dual.coproduct(dual.parse(args.expr))
    _emit(args, [dual.render_tensor(x)], {"result": dual.render_tensor(x)})
    return OK


def cmd_mul(args) -> int:
    out = dual.DualElement.one()
    for e in args.exprs:
        out = dual.ds_mul(out, dual.parse(e))
    _emit(args, [dual.render(out)], {"result": dual.render(out)})
    return OK


def cmd_normalize(args) -> int:
    x = dual.parse(args.expr)
    g = x.grade()
    grade = None if g == coefficients.INHOMOGENEOUS else list(g)
    _emit(args, [dual.render(x)], {"result": dual.render(x), "grade": grade})
    return OK


# -- Steenrod algebra


def cmd_pair(args) -> int:
    value = milnor.pair(dual.parse(args.element), milnor.parse(args.operation))
    _emit(args, [coefficients.render(value)], {"result": coefficients.render(value)})
    return OK


def cmd_product(args) -> int:
    out = milnor.SteenrodElt.one()
    for e in args.exprs:
        out = milnor.product(out, milnor.parse(e))
    _emit(args, [milnor.render(out)], {"result": milnor.render(out)})
    return OK


def cmd_table1_verify(args) -> int:
    checks = milnor.verify_table1()
    lines = []
    for c in checks:
        r = c.row
        status = "PASS" if c.ok else "FAIL"
        lines.append(f"{status}  ({r.degree.s},{r.degree.w})  {r.monomial:<10} c = {c.computed_conjugate}  |  {r.dual_name} = {r.g_expression}")
    passed = sum(c.ok for c in checks)
    lines.append(f"{passed}/{len(checks)} rows PASS")
    payload = {
        "rows": [
            {
                "monomial": c.row.monomial,
                "conjugate": c.computed_conjugate,
                "conjugate_ok": c.conjugate_ok,
                "milnor": c.row.dual_name,
                "milnor_ok": c.milnor_ok,
            }
            for c in checks
        ],
        "passed": passed,
        "total": len(checks),
    }
    _emit(args, lines, payload)
    return OK if passed == len(checks) else FAILED


def cmd_chi_check(args) -> int:
    report = milnor.chi_check()
    lines = report.lines() + [f"forced eps = {report.forced_sq2}, forced (delta, eps, lambda) = {report.forced_sq4}"]
    payload = {
        "forced_sq2": report.forced_sq2,
        "forced_sq4": [list(t) for t in report.forced_sq4],
        "involution": report.involution,
        "ok": report.ok,
    }
    _emit(args, lines, payload)
    return OK if report.ok else FAILED


# -- modules


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    stem = p.stem if p.suffix == ".json" else p.name
    if stem in fixtures.NAMES:
        return fixtures.path(stem)
    raise InputError(f"no such file: {path}")


def _read_json(path: str) -> dict:
    p = _resolve(path)
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _load_coaction(path: str) -> fmodule.Coaction:
    """A coaction file is used as is; a module file is converted."""
    data = _read_json(path)
    if "coaction" in data:
        return fmodule.load_coaction(data)
    return fmodule.comodule_from_action(fmodule.load_module(data))


def _write(args, data: dict) -> None:
    if args.output:
        Path(args.output).write_text(fmodule.dump_json(data))


def cmd_comodule(args) -> int:
    psi = fmodule.comodule_from_action(fmodule.load_module(_read_json(args.file)))
    psi.validate()
    data = fmodule.coaction_to_json(psi)
    _write(args, data)
    _emit(args, [f"psi({n}) = {psi.render(n)}" for n in psi.names], data)
    return OK


def cmd_dualize(args) -> int:
    module = fmodule.dualize(_load_coaction(args.file))
    if args.shift:
        module = fmodule.suspend(module, _parse_pair(args.shift))
    module.validate()
    data = fmodule.module_to_json(module)
    _write(args, data)
    lines = [f"{n} ({-g.s},{-g.w})" for n, g in module.basis] + module.render_action()
    _emit(args, lines, data)
    return OK


def cmd_iso(args) -> int:
    m = fmodule.load_module(_read_json(args.first))
    n = fmodule.load_module(_read_json(args.second))
    f = fmodule.iso_test(m, n)
    if f is None:
        _emit(args, ["not isomorphic"], {"isomorphic": False})
        return FAILED
    identity = all(f[x] == fmodule.ModuleElement.basis(x) for x in m.names)
    if identity:
        lines = ["isomorphic (identity)"]
    else:
        lines = ["isomorphic"] + [f"  {x} -> {fmodule.render_element(f[x])}" for x in m.names]
    payload = {"isomorphic": True, "identity": identity, "map": {x: str(f[x]) for x in m.names}}
    _emit(args, lines, payload)
    return OK


def cmd_roundtrip(args) -> int:
    module = fmodule.load_module(_read_json(args.file))
    psi = fmodule.comodule_from_action(module)
    psi.validate()
    back = fmodule.module_from_comodule(psi)
    lines = []
    ok = True
    for gen in milnor.GENERATORS:
        for x in module.names:
            want = module.action[gen].get(x, fmodule.ModuleElement.zero())
            got = back.action[gen].get(x, fmodule.ModuleElement.zero())
            if want != got:
                ok = False
                lines.append(f"MISMATCH {gen} {x}: file {want}, recovered {got}")
    lines.append("roundtrip PASS" if ok else "roundtrip FAIL")
    _emit(args, lines, {"ok": ok})
    return OK if ok else FAILED


def cmd_fixture(args) -> int:
    if args.name not in fixtures.NAMES:
        raise InputError(f"unknown fixture {args.name!r}; choose from {', '.join(fixtures.NAMES)}")
    sys.stdout.write(fixtures.path(args.name).read_text())
    return OK


def cmd_a1(args) -> int:
    v = a1catalog.StructureVector.from_string(args.vector)
    built = a1catalog.build_a1(v)
    if args.coaction:
        data = fmodule.coaction_to_json(built.coaction)
        lines = [f"psi({n}) = {built.coaction.render(n)}" for n in built.coaction.names]
    else:
        data = fmodule.module_to_json(built.module)
        lines = built.module.render_action()
    _write(args, data)
    _emit(args, lines, data)
    return OK


def _parse_pair(text: str):
    try:
        i, j = (int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"expected a bidegree like 6,2, got {text!r}") from None
    return (i, j)


# -- census


def cmd_census(args) -> int:
    rows = a1catalog.census_rows(self_dual_only=args.self_dual)
    lines = []
    if args.realizations:
        counts = {"Y(2,1)": 0, "Y(h,1)": 0}
        for r in rows:
            if r.realization:
                counts[r.realization] += 1
        lines.append(f"Y(2,1): {counts['Y(2,1)']}  Y(h,1): {counts['Y(h,1)']}")
    else:
        lines.append(a1catalog.CENSUS_HEADER)
        lines.extend(r.line() for r in rows)
        lines.append(f"{sum(r.self_dual for r in rows)} self-dual")
    payload = {
        "rows": [
            {
                "vector": str(r.vector),
                "self_dual": r.self_dual,
                "delta": str(r.dual),
                "realization": r.realization,
            }
            for r in rows
        ]
    }
    status = OK
    if args.full_verify:
        verified, failures = full_verify(full_negatives=args.all_negatives, samples=args.samples, seed=args.seed)
        lines.extend(failures)
        lines.append(f"{verified}/128 verified")
        payload["verified"] = verified
        payload["failures"] = failures
        if failures:
            status = FAILED
    _emit(args, lines, payload)
    return status


def full_verify(full_negatives: bool = False, samples: int = 8, seed: int = 0):
    """Round trip, dual formulas and uniqueness for every vector."""
    import random

    rng = random.Random(seed)
    verified = 0
    failures: list[str] = []
    report = a1catalog.census()
    if not report.ok:
        failures.append("census counts do not match")
    for v in a1catalog.all_vectors():
        try:
            built = a1catalog.build_a1(v)
            if fmodule.comodule_from_action(built.module) != built.coaction:
                raise a1catalog.CatalogError(f"vector {v}: recomputed coaction differs")
            a1catalog.dual_a1(v)
            _, _, fails = a1catalog.uniqueness_check(v, None if full_negatives else samples, rng)
        except fmodule.ModuleError as exc:
            fails = [str(exc)]
        failures.extend(fails)
        verified += not fails
    return verified, failures


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmotivic", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    add("conjugate", cmd_conjugate, "conjugation of a dual-algebra element").add_argument("expr")
    add("coproduct", cmd_coproduct, "coproduct of a dual-algebra element").add_argument("expr")
    add("mul", cmd_mul, "product of dual-algebra elements").add_argument("exprs", nargs="+")
    add("normalize", cmd_normalize, "normal form of a dual-algebra expression").add_argument("expr")
    p = add("pair", cmd_pair, "pair a dual element with an operation")
    p.add_argument("element")
    p.add_argument("operation")
    add("product", cmd_product, "product of Steenrod operations").add_argument("exprs", nargs="+")
    add("table1-verify", cmd_table1_verify, "check the low-degree Milnor basis table")
    add("chi-check", cmd_chi_check, "low-degree constraints on a candidate antiautomorphism")

    p = add("comodule", cmd_comodule, "coaction of a module file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p = add("dualize", cmd_dualize, "dual of a module or coaction file")
    p.add_argument("file")
    p.add_argument("--shift", help="regrade the result by a cohomological bidegree such as 6,2")
    p.add_argument("-o", "--output")
    p = add("iso", cmd_iso, "test two module files for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    add("roundtrip", cmd_roundtrip, "module -> coaction -> module").add_argument("file")
    add("fixture", cmd_fixture, "print a bundled example module").add_argument("name")
    p = add("a1", cmd_a1, "a catalog module, by its seven-bit vector")
    p.add_argument("vector")
    p.add_argument("--coaction", action="store_true")
    p.add_argument("-o", "--output")

    p = add("census", cmd_census, "the 128 structures on A(1) and their duals")
    p.add_argument("--self-dual", action="store_true", help="only self-dual rows")
    p.add_argument("--realizations", action="store_true", help="count realization labels")
    p.add_argument("--full-verify", action="store_true", help="round trips, dual formulas, uniqueness")
    p.add_argument("--all-negatives", action="store_true", help="check all 127 non-matches per vector")
    p.add_argument("--samples", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, coefficients.ParseError, dual.DegreeBoundError, fmodule.ModuleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
