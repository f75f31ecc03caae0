"""ringlab command line.

Exit codes: 0 when the checked property holds (or the run is clean), 1 when
it fails, 2 on usage, parse or build errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import polybox, wordalg
from .catalog import default_catalog, load_catalog
from .constructors import build
from .core import DEFAULT_ORDER_CAP, parse_ring_table
from .errors import AxiomViolation, RingLabError
from .hunt import hunt
from .predicates import (
    PROPERTY_NAMES,
    check_annihilator_characterization,
    check_ideal_characterization,
    decide,
)
from .report import SCHEMA, dumps, format_implications, format_matrix, implications_report, property_matrix

EXTRA_PROPERTIES = (
    "quasi_armendariz",
    "nilpotent_coeffs",
    "polynomial_left_n_reflexive",
    "ideal_characterization",
    "annihilator_characterization",
)

GLOBAL_DEFAULTS = {
    "json": False,
    "order_cap": DEFAULT_ORDER_CAP,
    "degree": polybox.DEFAULT_DEGREE,
    "middle_degree": polybox.DEFAULT_MIDDLE_DEGREE,
    "power_cap": polybox.DEFAULT_POWER_CAP,
    "max_middle": 8,
    "seed": 0,
    "timeout_secs": None,
}


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS so a flag given before the subcommand is not reset after it
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--order-cap", type=int, help=f"largest ring order to build (default {DEFAULT_ORDER_CAP})")
    p.add_argument("--degree", type=int, help="polynomial degree bound D")
    p.add_argument("--middle-degree", type=int, help="degree bound for middle polynomials")
    p.add_argument("--power-cap", type=int, help="largest power tried for polynomial nilpotency")
    p.add_argument("--max-middle", type=int, help="middle word length bound for wordalg")
    p.add_argument("--seed", type=int, help="seed for random search")
    p.add_argument("--timeout-secs", type=float, help="stop searching after this many seconds")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="ringlab", parents=[common],
                                     description="Exhaustive property checks on finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide one property of one ring")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ring", help='constructor expression, e.g. "M(2, Zmod(2))"')
    src.add_argument("--table", type=Path, help="ring table file")
    p.add_argument("--property", required=True, choices=PROPERTY_NAMES + EXTRA_PROPERTIES,
                   metavar="PROPERTY")

    p = sub.add_parser("matrix", parents=[common], help="property matrix over a catalog")
    p.add_argument("--catalog", type=Path, help="catalog file (default: shipped catalog)")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="include elapsed times (not reproducible)")

    p = sub.add_parser("implications", parents=[common], help="check the implication graph on a catalog")
    p.add_argument("--catalog", type=Path)
    p.add_argument("--experimental", action="store_true", help="also test the experimental edges")

    p = sub.add_parser("hunt", parents=[common], help="search for a ring separating two properties")
    p.add_argument("--holds", required=True, choices=PROPERTY_NAMES, metavar="PROPERTY")
    p.add_argument("--fails", required=True, choices=PROPERTY_NAMES, metavar="PROPERTY")
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--random", type=int, default=0, help="number of random subrings to try")
    p.add_argument("--limit", type=int, default=1, help="stop after this many finds")

    p = sub.add_parser("wordalg", parents=[common], help="free algebra modulo a pattern ideal")
    p.add_argument("--ideal", required=True, help="pattern ideal file or preset name")
    p.add_argument("--char", type=int, help="override the scalar field characteristic")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--check", help='"u * ? * v": is u w v = 0 for all middles w')
    what.add_argument("--nilpotent", help="word or element to test for nilpotency")
    what.add_argument("--normal-form", help="normal form of a word")
    what.add_argument("--embed-s1", action="store_true", help="matrix counterexample inside S1")

    p = sub.add_parser("axioms", parents=[common], help="validate a ring table file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", type=Path)
    src.add_argument("--ring")
    return parser


def _resolve(args):
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    return args


def _emit(args, doc, text):
    sys.stdout.write(dumps(doc) if args.json else text)


def _load_ring(args):
    if getattr(args, "table", None) is not None:
        return parse_ring_table(args.table.read_text())
    return build(args.ring, order_cap=args.order_cap)


def _decide_extra(R, args):
    prop = args.property
    if prop == "quasi_armendariz":
        return polybox.is_quasi_armendariz_bounded(R, args.degree, args.middle_degree)
    if prop == "nilpotent_coeffs":
        return polybox.nilpotent_coeffs_condition(R, args.degree, args.power_cap)
    if prop == "polynomial_left_n_reflexive":
        return polybox.polynomial_left_n_reflexive(R, args.degree, args.power_cap)
    if prop == "ideal_characterization":
        return check_ideal_characterization(R, order_cap=args.order_cap)
    return check_annihilator_characterization(R)


def cmd_check(args) -> int:
    R = _load_ring(args)
    v = decide(R, args.property) if args.property in PROPERTY_NAMES else _decide_extra(R, args)
    doc = {"schema": SCHEMA, "kind": "check", **v.to_dict(R, timings=True)}
    _emit(args, doc, v.describe(R) + "\n")
    return 0 if v.holds else 1


def _catalog(args):
    return default_catalog() if args.catalog is None else load_catalog(args.catalog)


def cmd_matrix(args) -> int:
    doc = property_matrix(_catalog(args), order_cap=args.order_cap, timings=args.timings)
    text = dumps(doc) if args.json else format_matrix(doc)
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_implications(args) -> int:
    doc = implications_report(_catalog(args), args.order_cap, args.experimental)
    _emit(args, doc, format_implications(doc))
    return 1 if doc["violations"] else 0


def cmd_hunt(args) -> int:
    res = hunt(args.holds, args.fails, max_depth=args.max_depth, order_cap=min(args.order_cap, 256),
               seed=args.seed, random_count=args.random, timeout_secs=args.timeout_secs, limit=args.limit)
    doc = {"schema": SCHEMA, "kind": "hunt", "seed": args.seed, **res.to_dict()}
    lines = [f"hunt {args.holds} and not {args.fails}: examined {res.examined} ring(s)"]
    if res.reason:
        lines.append(res.reason)
    if res.timed_out:
        lines.append("timed out; partial results")
    for f in res.found:
        lines.append(f"found {f['ring']} (order {f['order']}, {f['source']}): "
                     + ", ".join(f"{w['role']}={w['display']}" for w in f["witness"] or []))
    if not res.found and not res.reason:
        lines.append("nothing found within the search bounds")
    _emit(args, doc, "\n".join(lines) + "\n")
    return 0 if res.found else 1


def _pattern(args):
    if args.ideal in wordalg.PRESETS:
        P = wordalg.preset(args.ideal)
    else:
        P = wordalg.parse_pattern_ideal(Path(args.ideal).read_text(), Path(args.ideal).stem)
    if args.char is not None:
        P = wordalg.parse_pattern_ideal(str(P) + f"; char {args.char}", P.name)
    return P


def cmd_wordalg(args) -> int:
    P = _pattern(args)
    if args.normal_form is not None:
        nf = wordalg.normal_form(args.normal_form, P)
        shown = "0" if nf is None else (nf or "1")
        _emit(args, {"schema": SCHEMA, "kind": "normal_form", "ideal": str(P),
                     "word": args.normal_form, "normal_form": shown}, shown + "\n")
        return 0
    if args.nilpotent is not None:
        k = wordalg.nilpotency_index(args.nilpotent, P, max(args.power_cap, 2))
        doc = {"schema": SCHEMA, "kind": "nilpotency", "ideal": str(P), "element": args.nilpotent,
               "nilpotent": k is not None, "index": k, "bounds": {"power_cap": max(args.power_cap, 2)}}
        text = (f"{args.nilpotent} is nilpotent of index {k}\n" if k else
                f"{args.nilpotent}: no zero power up to {max(args.power_cap, 2)}\n")
        _emit(args, doc, text)
        return 0 if k else 1
    if args.embed_s1:
        res = wordalg.embed_in_S1(P, max_middle=min(args.max_middle, 4) if args.max_middle else 4)
        res.pop("elapsed")
        doc = {"schema": SCHEMA, "kind": "embed_s1", **res}
        text = (f"ASB = 0 up to middle length {res['bounds']['max_middle']}: {res['asb_zero']}\n"
                f"BA = {res['BA']} (zero: {res['ba_zero']})\n")
        _emit(args, doc, text)
        return 0 if res["asb_zero"] and not res["ba_zero"] else 1
    parts = [s.strip() for s in args.check.split("*")]
    if len(parts) != 3 or parts[1] != "?":
        raise RingLabError(f'--check expects "u * ? * v", got {args.check!r}')
    v = wordalg.check_orthogonality(parts[0], parts[2], P, args.max_middle)
    doc = {"schema": SCHEMA, "kind": "orthogonality", "ideal": str(P), **v.to_dict(timings=False)}
    _emit(args, doc, v.describe() + f"  (max middle {args.max_middle})\n")
    return 0 if v.holds else 1


def cmd_axioms(args) -> int:
    try:
        R = _load_ring(args)
    except AxiomViolation as exc:
        doc = {"schema": SCHEMA, "kind": "axioms", "valid": False, "axiom": exc.kind,
               "witness": list(exc.witness), "message": str(exc)}
        _emit(args, doc, f"invalid: {exc}\n")
        return 1
    doc = {"schema": SCHEMA, "kind": "axioms", "valid": True, "name": R.name, "order": R.order}
    _emit(args, doc, f"valid ring {R.name} of order {R.order}\n")
    return 0


COMMANDS = {
    "check": cmd_check,
    "matrix": cmd_matrix,
    "implications": cmd_implications,
    "hunt": cmd_hunt,
    "wordalg": cmd_wordalg,
    "axioms": cmd_axioms,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = _resolve(parser.parse_args(argv))
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return COMMANDS[args.command](args)
    except (RingLabError, OSError, KeyError, ValueError) as exc:
        print(f"ringlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
