"""Command-line interface: ``conway-tower <command> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import fixtures, oracle
from .descending import default_marking, descending_diagram
from .diagram import DiagramError, change_crossing, smooth_crossing
from .engine import conway_polynomial
from .geometry import GeneralPositionError, compute_shadow
from .reidemeister import validate_planarity
from .textio import ParseError, parse_contours, parse_diagrams, serialize_diagram

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

PROPERTIES = ("skein", "ordering", "marking", "moves")


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_diagrams(path: str):
    docs = parse_diagrams(_read(path))
    if not docs:
        raise InputError(f"{path}: no diagram blocks found")
    return docs


def _load_one(path: str):
    docs = _load_diagrams(path)
    if len(docs) != 1:
        raise InputError(f"{path}: expected one diagram, found {len(docs)}")
    return docs[0]


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    doc = _load_one(args.input)
    series = conway_polynomial(doc.diagram, args.max_degree)
    if args.json:
        print(json.dumps({str(n): c for n, c in sorted(series.coefficients.items())}))
    else:
        print(series.text())
    return EXIT_OK


def _random_inputs(prop: str, trials: int, seed: int):
    rng = random.Random(seed)
    cap = 7 if prop in ("ordering", "marking") else 8
    for i in range(trials):
        yield f"random#{i}", oracle.random_diagram(rng, cap)


def _check(prop: str, name: str, d, n_max: int, rng: random.Random) -> oracle.VerificationReport:
    if prop == "skein":
        return oracle.skein_report(d, n_max, name)
    if prop == "ordering":
        return oracle.check_ordering(d, n_max, name=name)
    if prop == "marking":
        return oracle.check_marking(d, n_max, name=name)
    steps = rng.randint(1, 15)
    return oracle.check_move_invariance(d, rng.randrange(2**31), steps, n_max, name=name)


def cmd_verify(args) -> int:
    prop = args.property
    n_max = args.max_degree if args.max_degree is not None else (6 if prop == "moves" else 4)
    if args.random:
        inputs = _random_inputs(prop, args.trials, args.seed)
    else:
        inputs = ((doc.name, doc.diagram) for doc in _load_diagrams(args.input))
    rng = random.Random(args.seed)
    report = oracle.VerificationReport(prop, limits={"n_max": n_max, "seed": args.seed})
    for name, d in inputs:
        if prop == "moves" and not validate_planarity(d):
            raise InputError(f"{name}: diagram fails the planarity check")
        report.merge(_check(prop, name, d, n_max, rng))
    _print_report(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_tables(args) -> int:
    report = oracle.table_check()
    _print_report(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def _print_report(report: oracle.VerificationReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_dict(), sort_keys=True))
        return
    status = "PASS" if report.passed else "FAIL"
    print(f"{report.property}: {status} ({report.instances} instances, {len(report.failures)} failures)")
    for failure in report.failures:
        print("  " + json.dumps(failure, sort_keys=True))


def cmd_ingest(args) -> int:
    contours = parse_contours(_read(args.contours))
    shadow, _ = compute_shadow(contours)
    d = descending_diagram(shadow, default_marking(shadow))
    _emit(serialize_diagram(d, Path(args.contours).stem), args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    doc = _load_one(args.input)
    op = change_crossing if args.command == "switch" else smooth_crossing
    _emit(serialize_diagram(op(doc.diagram, args.crossing), doc.name), args.out)
    return EXIT_OK


def cmd_fixture(args) -> int:
    if args.name not in fixtures.names():
        raise InputError(f"unknown fixture {args.name!r}; choose from {', '.join(fixtures.names())}")
    _emit(fixtures.text(args.name), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conway-tower", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="Conway coefficients of a diagram file")
    c.add_argument("--input", required=True)
    c.add_argument("--max-degree", type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a property check")
    v.add_argument("--property", required=True, choices=PROPERTIES)
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--input")
    src.add_argument("--random", action="store_true")
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-degree", type=int)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="check the embedded fixture table")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tables)

    i = sub.add_parser("ingest", help="contours -> descending diagram document")
    i.add_argument("--contours", required=True)
    i.add_argument("--out")
    i.set_defaults(func=cmd_ingest)

    for name, text in (("switch", "change one crossing"), ("smooth", "smooth one crossing")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--input", required=True)
        s.add_argument("--crossing", type=int, required=True)
        s.add_argument("--out")
        s.set_defaults(func=cmd_transform)

    f = sub.add_parser("fixture", help="print an embedded fixture document")
    f.add_argument("name")
    f.add_argument("--out")
    f.set_defaults(func=cmd_fixture)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, GeneralPositionError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
