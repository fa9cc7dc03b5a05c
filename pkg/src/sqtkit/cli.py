"""Command-line driver.

    sqtkit catalog kC2-Rminus | sqtkit check all -
    sqtkit double-table S3
    sqtkit double spec.json -o double.json && sqtkit check sqt double.json

Exit status: 0 every check passed, 1 some check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import CatalogError, catalog, catalog_modules, catalog_names
from .double import DoubleError, build_double, example_213_table
from .drinfeld import DrinfeldError, compute_drinfeld, drinfeld_report
from .groups import GROUPS, group_by_name
from .hopf import SingularAntipode, check_hopf_axioms, check_semicocommutative_s2, is_semicocommutative
from .modules import LEFT_RIGHT, ModuleError, check_braided_category, check_normal
from .report import SKIPPED, Check, Report, boolean
from .specfile import AlgebraSpec, ModuleSpec, SpecError
from .sqt import SqtStructure, check_quasitriangular, check_sqt
from .suite import SECTIONS, SuiteOptions, run_suite
from .tensor import Tensor

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input / output -----------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _write(path: str | None, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def load_algebra(path: str) -> AlgebraSpec:
    return AlgebraSpec.from_json(_read(path), where=path if path != "-" else "stdin")


def load_module(path: str) -> ModuleSpec:
    return ModuleSpec.from_json(_read(path), where=path if path != "-" else "stdin")


def format_element(labels, x: Tensor) -> str:
    """``x`` in basis coordinates, e.g. ``1/2·1 - 1/2·g``."""
    f = x.field
    terms = []
    for (i,), c in x.nonzero():
        coeff = f.format(c)
        terms.append(labels[i] if coeff == "1" else f"{coeff}·{labels[i]}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _emit(args, report: Report, extra: dict | None = None, preamble: str = "") -> int:
    if args.format == "json":
        out = dict(extra or {})
        out.update(report.to_dict())
        print(json.dumps(out, indent=2, ensure_ascii=False))
    else:
        if preamble:
            print(preamble)
        print(report.to_text())
    return EXIT_PASS if report.passed else EXIT_FAIL


# -- structure helpers ----------------------------------------------------------

def _hopf_report(spec: AlgebraSpec) -> Report:
    return check_hopf_axioms(spec.hopf(strict=False)).tag("hopf")


def _sqt_report(spec: AlgebraSpec) -> Report:
    """Hopf axioms first; R is checked only on a genuine Hopf algebra."""
    rep = _hopf_report(spec)
    if not rep.passed:
        rep.add(Check("sqt", "suite", SKIPPED, detail="requires hopf", section="sqt"))
        return rep
    try:
        H = spec.hopf(strict=True)
    except SingularAntipode as exc:
        rep.add(boolean("antipode bijective", "Def 1.1", False, {"reason": str(exc)}))
        return rep
    R = spec.R if spec.R is not None else H.unit2
    sub = check_sqt(H, R)
    if spec.claims_quasitriangular:
        sub.extend(check_quasitriangular(H, R))
    if spec.claims_semicocommutative:
        ok, witness = is_semicocommutative(H)
        sub.add(boolean("Ad lands in H⊗Z(H)", "intro (semicocommutative)", ok, witness))
        sub.add(check_semicocommutative_s2(H))
    return rep.extend(sub.tag("sqt"))


def _structure(spec: AlgebraSpec, args) -> SqtStructure | int:
    """The verified structure, or the exit code after printing why it is not one."""
    rep = _sqt_report(spec)
    if not rep.passed:
        return _emit(args, rep)
    return spec.structure(check=False)


# -- subcommands --------------------------------------------------------------

def cmd_check(args) -> int:
    spec = load_algebra(args.file)
    if args.what == "hopf":
        return _emit(args, _hopf_report(spec))
    if args.what == "sqt":
        return _emit(args, _sqt_report(spec))
    modules = [load_module(p) for p in args.module]
    opts = SuiteOptions(prop12_max_n=args.prop12_max_n, seed=args.seed,
                        morphisms_per_pair=args.morphisms, skip=tuple(args.skip))
    return _emit(args, run_suite(spec, modules, opts))


def cmd_center(args) -> int:
    spec = load_algebra(args.file)
    H = spec.hopf(strict=False)
    basis = [format_element(H.labels, z) for z in H.center]
    if args.format == "json":
        print(json.dumps({"dim": len(basis), "basis": basis}, indent=2, ensure_ascii=False))
    else:
        print(f"Z(H) has dimension {len(basis)}")
        for z in basis:
            print(f"  {z}")
    return EXIT_PASS


def cmd_drinfeld(args) -> int:
    spec = load_algebra(args.file)
    S = _structure(spec, args)
    if isinstance(S, int):
        return S
    try:
        D = compute_drinfeld(S)
    except DrinfeldError:
        return _emit(args, drinfeld_report(S))
    rep = drinfeld_report(S)
    labels = S.H.labels
    u, u_inv = format_element(labels, D.u), format_element(labels, D.u_inv)
    return _emit(args, rep, {"u": u, "u_inv": u_inv}, preamble=f"u   = {u}\nu⁻¹ = {u_inv}")


def cmd_double(args) -> int:
    spec = load_algebra(args.file)
    S = _structure(spec, args)
    if isinstance(S, int):
        return S
    try:
        D = build_double(S)
    except DoubleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _emit(args, exc.report)
    out = AlgebraSpec.from_hopf(D.carrier, D.Tmatrix, name=f"D({spec.name})",
                                claims_quasitriangular=True)
    _write(args.output, out.to_json())
    if args.output not in (None, "-"):
        print(f"wrote {D.dim}-dimensional double to {args.output}", file=sys.stderr)
    return EXIT_PASS


def cmd_double_table(args) -> int:
    try:
        G = group_by_name(args.group)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ex = example_213_table(G)
    if args.format == "json":
        out = {"group": G.name, "dim": ex.double.dim, "mismatches": ex.mismatches,
               "matching": ex.matching, "T_matches": ex.T_matches,
               "T_summands": ex.T_summands}
        out.update(ex.report.to_dict())
        print(json.dumps(out, indent=2, ensure_ascii=False))
    else:
        n2 = ex.double.dim
        print(f"k[{G.name}]*⋈k[{G.name}]: dimension {n2}, {n2 * n2} basis products")
        for orientation, k in ex.mismatches.items():
            print(f"  {orientation}: {k} mismatched cells")
        print(f"matching orientation: {', '.join(ex.matching) or 'none'}")
        print(f"T = Σ δ_x⋈1 ⊗ ε⋈x: {'matches' if ex.T_matches else 'differs'} "
              f"({ex.T_summands} summands)")
        if args.table:
            print(ex.table_text())
        print(ex.report.to_text())
    return EXIT_PASS if ex.report.passed else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.list:
        print("\n".join(catalog_names()))
        return EXIT_PASS
    if not args.name:
        raise UsageError("catalog: NAME is required (or --list)")
    spec = catalog(args.name)
    _write(args.output, spec.to_json())
    if args.modules:
        os.makedirs(args.modules, exist_ok=True)
        for key, ms in catalog_modules(args.name).items():
            _write(f"{args.modules}/{args.name}.{key}.json", ms.to_json())
    return EXIT_PASS


def cmd_module_check(args) -> int:
    spec = load_algebra(args.algebra)
    S = _structure(spec, args)
    if isinstance(S, int):
        return S
    M = load_module(args.module).module(S)
    return _emit(args, check_normal(M))


def cmd_braiding_check(args) -> int:
    spec = load_algebra(args.algebra)
    S = _structure(spec, args)
    if isinstance(S, int):
        return S
    mods = [load_module(p).module(S) for p in args.modules]
    for M in mods:
        if M.variant != LEFT_RIGHT:
            raise UsageError(f"module {M.name!r}: braiding needs left-right modules, "
                             f"got {M.variant}")
    rep = Report()
    for M in mods:
        for chk in check_normal(M):
            chk.name = f"{M.name}: {chk.name}"
            rep.add(chk)
    if rep.passed:
        rep.extend(check_braided_category(S, mods, seed=args.seed,
                                          morphisms_per_pair=args.morphisms))
    return _emit(args, rep)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=0)
    seeded.add_argument("--morphisms", type=int, default=5, metavar="N",
                        help="random morphisms per module pair for naturality")

    p = argparse.ArgumentParser(prog="sqtkit", description=__doc__.split("\n\n")[0],
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[fmt, seeded], help="verify an algebra file")
    c.add_argument("what", choices=("hopf", "sqt", "all"))
    c.add_argument("file", help="AlgebraSpec JSON, or - for stdin")
    c.add_argument("--prop12-max-n", type=int, default=3, metavar="N")
    c.add_argument("--module", action="append", default=[], metavar="MOD",
                   help="extra ModuleSpec to include in check all (repeatable)")
    c.add_argument("--skip", action="append", default=[], choices=SECTIONS,
                   help="suite section to skip (repeatable)")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("center", parents=[fmt], help="basis of Z(H)")
    c.add_argument("file")
    c.set_defaults(func=cmd_center)

    c = sub.add_parser("drinfeld", parents=[fmt], help="u, u⁻¹ and the Drinfeld checks")
    c.add_argument("file")
    c.set_defaults(func=cmd_drinfeld)

    c = sub.add_parser("double", parents=[fmt], help="write H⋈H* with R = T")
    c.add_argument("file")
    c.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    c.set_defaults(func=cmd_double)

    c = sub.add_parser("double-table", parents=[fmt],
                       help="compare k[G]*⋈k[G] with Example 2.13")
    c.add_argument("group", help=f"one of {', '.join(GROUPS)}")
    c.add_argument("--table", action="store_true", help="print every basis product")
    c.set_defaults(func=cmd_double_table)

    c = sub.add_parser("catalog", help="emit a built-in AlgebraSpec")
    c.add_argument("name", nargs="?")
    c.add_argument("-o", "--output", default=None)
    c.add_argument("--list", action="store_true", help="list catalog names")
    c.add_argument("--modules", metavar="DIR", help="also write module fixtures into DIR")
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("module-check", parents=[fmt], help="verify a normal module")
    c.add_argument("algebra")
    c.add_argument("module")
    c.set_defaults(func=cmd_module_check)

    c = sub.add_parser("braiding-check", parents=[fmt, seeded],
                       help="braided-category checks on a set of modules")
    c.add_argument("algebra")
    c.add_argument("modules", nargs="+")
    c.set_defaults(func=cmd_braiding_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except (UsageError, SpecError, CatalogError, ModuleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # shape/field mismatches between a module file and its algebra
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
