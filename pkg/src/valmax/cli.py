"""Command-line front end.

Every subcommand prints one canonical JSON document on stdout.  ``--table``
adds a short human-readable summary on stderr.  Exit codes: 0 success,
1 failed check or invalid input, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .core import GenerationError, GoodIdeal, equals, validate
from .io import (DocumentError, dumps, generation_input_from_dict, generation_input_to_dict,
                 ideal_from_dict, ideal_to_dict, points_json)
from .lattice import Box, set_coord_limit


class InputError(Exception):
    """Bad input file or an input that fails validation (exit 1)."""


def _parse_point(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_window(text: str) -> Box:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("window must look like LO:HI, e.g. 0,0:4,4")
    try:
        return Box(_parse_point(lo), _parse_point(hi))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_seeds(text: str) -> range:
    a, sep, b = text.partition("..")
    try:
        return range(int(a), int(b) + 1) if sep else range(int(a), int(a) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed range must look like A..B, got {text!r}")


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}")


def _load_valid(path: str) -> GoodIdeal:
    try:
        E = ideal_from_dict(_read_json(path))
    except DocumentError as exc:
        raise InputError(f"{path}: {exc}")
    report = validate(E)
    if not report.ok:
        first = report.violations[0]
        raise InputError(f"{path}: not a good semigroup ideal ({first.axiom}: {first.message})")
    return E


def _table(args, rows):
    if args.table:
        width = max((len(k) for k, _ in rows), default=0)
        for k, v in rows:
            print(f"{k:<{width}}  {v}", file=sys.stderr)


def _figure(args, E, title="", extra=None):
    if getattr(args, "figure", None):
        from .plotting import plot_ideal

        try:
            plot_ideal(E, args.figure, title, extra)
        except ValueError as exc:
            raise InputError(str(exc))


# -- subcommands --------------------------------------------------------------


def cmd_validate(args):
    try:
        E = ideal_from_dict(_read_json(args.input))
    except DocumentError as exc:
        raise InputError(f"{args.input}: {exc}")
    report = validate(E)
    _table(args, [("valid", report.ok)] + [(v.axiom, v.message) for v in report.violations])
    return report.to_dict(), 0 if report.ok else 1


def cmd_dual(args):
    from .duality import dual

    E = _load_valid(args.input)
    D = dual(E).dual
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dumps(ideal_to_dict(D)) + "\n")
    _figure(args, D, "dual")
    _table(args, [("dual min", D.mu), ("dual conductor", D.gammaE), ("small elements", len(D.small))])
    return ideal_to_dict(D), 0


def cmd_maximals(args):
    from .maximals import classify_maximals
    from .stdbasis import irreducible_absolute_maximals

    E = _load_valid(args.input)
    rep = classify_maximals(E)
    if args.kind == "all":
        out = rep.to_dict()
    elif args.kind == "irreducible-absolute":
        out = {"kind": args.kind, "points": points_json(irreducible_absolute_maximals(E))}
    else:
        out = {"kind": args.kind, "points": points_json(getattr(rep, args.kind))}
    _figure(args, E, "maximals")
    _table(args, [("maximals", sorted(rep.maximals)), ("absolute", sorted(rep.absolute)),
                  ("relative", sorted(rep.relative))])
    return out, 0


def cmd_symmetry(args):
    from .maximals import symmetry_check

    E = _load_valid(args.input)
    rep = symmetry_check(E)
    _table(args, [("verdicts", len(rep.verdicts)), ("violated", len(rep.violations)),
                  ("skipped", rep.skipped)])
    return rep.to_dict(), 0 if rep.ok else 1


def _generation_source(args):
    from .generation import generation_input

    doc = _read_json(args.input)
    try:
        if isinstance(doc, dict) and "projections" in doc:
            G, ambient = generation_input_from_dict(doc)
            return G, ambient, None
        E = ideal_from_dict(doc)
    except DocumentError as exc:
        raise InputError(f"{args.input}: {exc}")
    except ValueError as exc:
        raise InputError(f"{args.input}: {exc}")
    report = validate(E)
    if not report.ok:
        raise InputError(f"{args.input}: not a good semigroup ideal ({report.violations[0].axiom})")
    if E.p < 2:
        raise InputError("generation needs p >= 2")
    return generation_input(E), E.ambient, E


def cmd_reconstruct(args):
    from .generation import ReconstructionError, reconstruct

    G, ambient, E = _generation_source(args)
    window = args.window
    if window is None and E is not None:
        window = Box(E.mu, tuple(x + 1 for x in E.gammaE))
    if window is not None and window.p != G.p:
        raise InputError(f"window has dimension {window.p}, expected {G.p}")
    try:
        R = reconstruct(G, ambient, window)
    except ReconstructionError as exc:
        raise InputError(str(exc))
    out = {"reconstructed": ideal_to_dict(R)}
    code = 0
    if E is not None:
        out["matches_input"] = equals(R, E)
        code = 0 if out["matches_input"] else 1
    if args.emit_input:
        out["input"] = generation_input_to_dict(G, ambient)
    _table(args, [("min", R.mu), ("conductor", R.gammaE), ("matches", out.get("matches_input", "n/a"))])
    return out, code


def cmd_check_generation(args):
    from .generation import generation_disagreements

    E = _load_valid(args.input)
    if E.p < 2:
        raise InputError("generation needs p >= 2")
    if args.window is not None and args.window.p != E.p:
        raise InputError(f"window has dimension {args.window.p}, expected {E.p}")
    rep = generation_disagreements(E, args.window)
    ok = (not rep["relmax_disagreements"] and not rep["fprime_disagreements"]
          and not rep["members_failing_projection"] and rep["relmax_in_fprime"])
    rep["ok"] = ok
    _table(args, [(k, v) for k, v in sorted(rep.items()) if not isinstance(v, list) or not v])
    return rep, 0 if ok else 1


def cmd_stdbasis(args):
    from .stdbasis import coverage_report, eji_sets, eji_violations

    E = _load_valid(args.input)
    try:
        rep = coverage_report(E, args.nu)
    except ValueError as exc:
        raise InputError(str(exc))
    nu = tuple(rep["nu"])
    rep["eji_sets"] = [s.to_dict() for s in eji_sets(E, nu)]
    bad = eji_violations(E, nu)
    rep["eji_violations"] = bad
    extra = {"irreducible absolute maximals": {tuple(v) for v in rep["irreducible_absolute_maximals"]}}
    _figure(args, E, "irreducible absolute maximals", extra)
    _table(args, [("nu", nu), ("generators", rep["generators"]), ("uncovered", rep["uncovered"]),
                  ("violations", len(bad))])
    return rep, 0 if not bad else 1


def cmd_from_curve(args):
    from .curveval import CurveSpec, FitError, PolySyntaxError, ingest_curve

    doc = _read_json(args.input)
    try:
        if args.T is not None:
            doc = dict(doc, T=args.T)
        spec = CurveSpec.from_dict(doc)
    except PolySyntaxError as exc:
        raise InputError(f"{args.input}: generator: {exc}")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.input}: bad curve document: {exc}")
    try:
        E = ingest_curve(spec, args.degree, args.trials, args.seed, args.window)
    except FitError as exc:
        raise InputError(str(exc))
    _table(args, [("ambient conductor", E.ambient.gamma), ("min", E.mu), ("conductor", E.gammaE)])
    return ideal_to_dict(E), 0


def cmd_fuzz(args):
    from .checks import run_many, summarize

    if not 2 <= args.p <= 4 or not 2 <= args.bound <= 8:
        raise InputError("fuzz needs 2 <= p <= 4 and 2 <= bound <= 8")
    jobs = [(s, args.p, args.bound) for s in args.seeds]
    summary = summarize(run_many(jobs, args.parallel))
    for f in summary["failures"]:
        print(f"FAIL seed={f['seed']} p={f['p']} bound={f['bound']}", file=sys.stderr)
    _table(args, [("instances", summary["instances"]), ("passed", summary["passed"]),
                  ("failed", summary["failed"])])
    return summary, 0 if summary["failed"] == 0 else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="valmax", description="Good semigroup ideals: duals, maximals, generation.")
    ap.add_argument("--version", action="version", version=f"valmax {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true", help="human-readable summary on stderr")
    common.add_argument("--coord-limit", type=int, default=None, help="max |coordinate| (default 10^6)")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, figure=False):
        p = sub.add_parser(name, parents=[common], help=help, description=help)
        p.set_defaults(func=func)
        if figure:
            p.add_argument("--figure", metavar="PATH", help="also render a figure (p = 2 or 3)")
        return p

    p = add("validate", cmd_validate, "check the good-ideal axioms")
    p.add_argument("input")
    p = add("dual", cmd_dual, "compute the dual ideal", figure=True)
    p.add_argument("input")
    p.add_argument("-o", "--output", help="also write the dual document here")
    p = add("maximals", cmd_maximals, "list maximals", figure=True)
    p.add_argument("input")
    p.add_argument("--kind", choices=["all", "absolute", "relative", "irreducible-absolute"], default="all")
    p = add("symmetry-check", cmd_symmetry, "verify the maximals correspondence with the dual")
    p.add_argument("input")
    p = add("reconstruct", cmd_reconstruct, "rebuild an ideal from projections and relative maximals")
    p.add_argument("input", help="ideal document or generation-input document")
    p.add_argument("--window", type=_parse_window, help="LO:HI, e.g. 0,0:4,4")
    p.add_argument("--emit-input", action="store_true", help="include the generation input in the output")
    p = add("check-generation", cmd_check_generation, "compare both membership criteria with the ideal")
    p.add_argument("input")
    p.add_argument("--window", type=_parse_window, help="LO:HI, e.g. 0,0:4,4")
    p = add("stdbasis-report", cmd_stdbasis, "standard-basis values and irreducible absolute maximals", figure=True)
    p.add_argument("input")
    p.add_argument("--nu", type=_parse_point, help="comma-separated point with nu + N^p inside the ideal")
    p = add("from-curve", cmd_from_curve, "value set of an ideal on a parametrised curve")
    p.add_argument("input")
    p.add_argument("--degree", type=int, default=None, help="monomial degree bound (default T)")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-T", type=int, default=None, help="override the truncation order")
    p.add_argument("--window", type=_parse_window)
    p = add("fuzz", cmd_fuzz, "run the property checks on seeded random ideals")
    p.add_argument("--seeds", type=_parse_seeds, default=range(1, 51), help="A..B (inclusive)")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)  # exits with 2 on usage errors
    if args.coord_limit is not None:
        try:
            set_coord_limit(args.coord_limit)
        except ValueError as exc:
            ap.error(str(exc))
    try:
        out, code = args.func(args)
    except InputError as exc:
        print(dumps({"error": str(exc)}))
        print(f"valmax: {exc}", file=sys.stderr)
        return 1
    except (GenerationError, OverflowError) as exc:
        print(dumps({"error": str(exc)}))
        print(f"valmax: {exc}", file=sys.stderr)
        return 1
    print(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
