"""Command-line surface.

Exit codes are a stable contract: 0 success, 1 check failure, 2 parse or
usage error, 3 infeasible.
"""

from __future__ import annotations

import argparse
import sys

from .applications import check_yd_module, check_yd_substructures
from .core import (check_hom_algebra, check_hom_coalgebra, check_hom_comodule,
                   check_hom_hopf, check_hom_module, yau_twist)
from .doi import (check_comodule_algebra, check_doi_datum, check_doi_module,
                  check_module_coalgebra)
from .golden import golden_file, golden_names
from .integrals import Infeasible, solve_normalized_integral, verify_integral
from .io import (StructureFile, StructureParseError, certificate_to_raw,
                 hopf_to_raw, integral_to_raw, morphism_to_raw,
                 parse_field_flag, parse_structure_file,
                 serialize_structure_file)
from .maschke import separability_report, split_epimorphism
from .report import AxiomReport, ConstructionError

OK, CHECK_FAILED, USAGE = 0, 1, 2
INFEASIBLE = 3


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except StructureParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report.format(), file=sys.stderr)
        return CHECK_FAILED
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homhopf",
        description="Exact checks, integrals and splittings for monoidal "
                    "Hom-Hopf structures.")
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("check", help="run the appropriate axiom checker on a named object")
    p.add_argument("path")
    p.add_argument("object")
    p.add_argument("--verbose", action="store_true", help="print every residual")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("find-integral", help="solve for a normalized integral of a datum")
    p.add_argument("path")
    p.add_argument("datum")
    p.add_argument("--out", help="write theta as a structure file")
    p.set_defaults(fn=cmd_find_integral)

    p = sub.add_parser("certify", help="integral plus verified retractions on modules")
    p.add_argument("path")
    p.add_argument("datum")
    p.add_argument("modules", nargs="+")
    p.add_argument("--out", help="write the certificate as a structure file")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("split", help="upgrade an A-linear section to the Doi category")
    p.add_argument("path")
    p.add_argument("datum")
    p.add_argument("f", help="name of the epimorphism")
    p.add_argument("g", help="name of its A-linear section")
    p.add_argument("--out", help="write the section as a structure file")
    p.add_argument("--max-twist-power", type=int, default=2,
                   help="twist-power search window (default 2)")
    p.set_defaults(fn=cmd_split)

    p = sub.add_parser("twist", help="twist a classical Hopf algebra along an automorphism")
    p.add_argument("path")
    p.add_argument("hopf")
    p.add_argument("automorphism", help="name of a morphism object")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=cmd_twist)

    p = sub.add_parser("examples", help="emit a built-in golden structure file")
    p.add_argument("name", nargs="?", help="example name; omit to list")
    p.add_argument("--field", default="Q", help="Q (default) or GF:<p>")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=cmd_examples)
    return parser


def _load(path: str) -> StructureFile:
    with open(path, encoding="utf-8") as fh:
        return parse_structure_file(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_CHECKERS = {
    "hom_hopf_algebra": lambda sf, name: check_hom_hopf(sf.build(name)),
    "hom_algebra": lambda sf, name: check_hom_algebra(sf.build(name)),
    "hom_coalgebra": lambda sf, name: check_hom_coalgebra(sf.build(name)),
    "doi_datum": lambda sf, name: check_doi_datum(sf.build(name)),
}


def _check_object(sf: StructureFile, name: str) -> AxiomReport:
    kind = sf.kind_of(name)
    if kind in _CHECKERS:
        return _CHECKERS[kind](sf, name)
    raw = sf.raw[name]
    if kind == "hom_module":
        return check_hom_module(sf.build(name), _as_algebra(sf, raw["algebra"]))
    if kind == "hom_comodule":
        return check_hom_comodule(sf.build(name), _as_coalgebra(sf, raw["coalgebra"]))
    if kind == "comodule_algebra":
        return check_comodule_algebra(sf.build(name), sf.build(raw["hopf"]))
    if kind == "module_coalgebra":
        return check_module_coalgebra(sf.build(name), sf.build(raw["hopf"]))
    if kind == "doi_module":
        return check_doi_module(sf.build(name), sf.build(raw["datum"]))
    if kind == "yd_module":
        m = sf.build(name)
        h = sf.build(raw["hopf"])
        return check_yd_substructures(m, h).merged(check_yd_module(m, h))
    if kind == "integral":
        return verify_integral(sf.build(name), sf.build(raw["datum"]))
    raise ValueError(f"objects of kind {kind!r} have no checker")


def _as_algebra(sf, name):
    obj = sf.build(name)
    return obj.as_algebra() if hasattr(obj, "as_algebra") else obj


def _as_coalgebra(sf, name):
    obj = sf.build(name)
    return obj.as_coalgebra() if hasattr(obj, "as_coalgebra") else obj


def cmd_check(args) -> int:
    sf = _load(args.path)
    report = _check_object(sf, args.object)
    print(f"{args.object}: {report.format(labels=sf.labels(args.object), verbose=args.verbose)}")
    return OK if report.passed else CHECK_FAILED


def cmd_find_integral(args) -> int:
    sf = _load(args.path)
    datum = sf.build(args.datum)
    result = solve_normalized_integral(datum)
    if isinstance(result, Infeasible):
        print(result.message())
        return INFEASIBLE
    labels_c = sf.labels(sf.raw[args.datum]["coalgebra"]) or \
        [str(i) for i in range(result.dim_c)]
    labels_a = sf.labels(sf.raw[args.datum]["algebra"]) or \
        [str(i) for i in range(result.dim_a)]
    print(f"normalized integral for {args.datum} "
          f"({result.report.checked} conditions verified):")
    for i in range(result.dim_c):
        for j in range(result.dim_c):
            coeffs = [str(result.theta.at(i, j, k)) for k in range(result.dim_a)]
            if any(c != "0" for c in coeffs):
                val = " + ".join(f"{c}*{labels_a[k]}" for k, c in enumerate(coeffs) if c != "0")
                print(f"  theta({labels_c[i]} (x) {labels_c[j]}) = {val}")
    if args.out:
        out = StructureFile(sf.field, dict(sf.raw))
        out.raw["theta"] = integral_to_raw(result, args.datum)
        _emit(serialize_structure_file(out), args.out)
    return OK


def cmd_certify(args) -> int:
    sf = _load(args.path)
    datum = sf.build(args.datum)
    modules = [(name, sf.build(name)) for name in args.modules]
    result = separability_report(datum, modules)
    if isinstance(result, Infeasible):
        print(result.message())
        return INFEASIBLE
    for name, ok in result.checked_modules:
        print(f"retraction on {name}: {'verified' if ok else 'FAILED'}")
    if args.out:
        out = StructureFile(sf.field, dict(sf.raw))
        out.raw["certificate"] = certificate_to_raw(result.theta, args.datum,
                                                    result.checked_modules)
        _emit(serialize_structure_file(out), args.out)
    return OK if result.all_passed else CHECK_FAILED


def cmd_split(args) -> int:
    sf = _load(args.path)
    datum = sf.build(args.datum)
    f_raw = sf.raw[args.f]
    src = sf.build(f_raw["source"])
    dst = sf.build(f_raw["target"])
    theta = solve_normalized_integral(datum)
    if isinstance(theta, Infeasible):
        print(theta.message())
        return INFEASIBLE
    section = split_epimorphism(sf.build(args.f), sf.build(args.g), src, dst,
                                theta, datum, max_twist_power=args.max_twist_power)
    print(f"verified section of {args.f} found")
    if args.out:
        out = StructureFile(sf.field, dict(sf.raw))
        out.raw["section"] = morphism_to_raw(section, f_raw["target"], f_raw["source"])
        _emit(serialize_structure_file(out), args.out)
    return OK


def cmd_twist(args) -> int:
    sf = _load(args.path)
    hopf = sf.build(args.hopf)
    auto = sf.build(args.automorphism)
    twisted = yau_twist(hopf, auto)
    out = StructureFile(sf.field, {args.hopf + "_twisted":
                                   hopf_to_raw(twisted, sf.labels(args.hopf))})
    _emit(serialize_structure_file(out), args.out)
    return OK


def cmd_examples(args) -> int:
    if not args.name:
        print("\n".join(golden_names()))
        return OK
    field = parse_field_flag(args.field)
    sf = golden_file(args.name, field)
    _emit(serialize_structure_file(sf), args.out)
    return OK


if __name__ == "__main__":
    sys.exit(main())
