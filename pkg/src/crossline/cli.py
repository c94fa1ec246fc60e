"""Command-line front end: ``crossline {cr,ratio,construct,verify,conformance,render}``.

Exit codes: 0 on success (or all samples passing), 1 when a verification
suite finds a counterexample, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import harness
from .extended import format_extended, parse_extended
from .line_arith import ConstructionError, ConstructionTrace, LineFrame, geometric_add, geometric_mul, label, point_of
from .plane import PlaneError, parse_point
from .ratios import cross_ratio, ratio2, ratio3
from .scalar import ScalarError, format_scalar, parse_scalar
from .svg import UnsupportedFieldError, emit_svg

FIELD_ALIASES = {
    "rat": "rat", "q": "rat", "rational": "rat",
    "gauss": "gauss", "gaussian": "gauss",
    "quat": "quat", "h": "quat", "quaternion": "quat",
}


class UsageError(Exception):
    pass


def _field(text: str) -> str:
    try:
        return FIELD_ALIASES[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown field {text!r} (expected rat, gauss or quat)") from None


def _default_seed() -> int:
    raw = os.environ.get("CROSSLINE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw, 0)
    except ValueError:
        raise UsageError(f"CROSSLINE_SEED is not an integer: {raw!r}") from None


def _split(text: str, n: tuple, what: str) -> list:
    parts = [s.strip() for s in text.split(";")]
    if len(parts) not in n:
        raise UsageError(f"{what} needs {' or '.join(map(str, n))} points separated by ';', got {len(parts)}")
    return parts


# -- subcommands ---------------------------------------------------------------

def cmd_cr(args) -> int:
    pts = [parse_extended(s, args.field) for s in _split(args.points, (4,), "--points")]
    print(format_extended(cross_ratio(*pts)))
    return 0


def cmd_ratio(args) -> int:
    pts = [parse_scalar(s, args.field) for s in _split(args.points, (2, 3), "--points")]
    value = ratio2(*pts) if len(pts) == 2 else ratio3(*pts)
    print(format_scalar(value))
    return 0


def _describe(step) -> str:
    if step.op == "given":
        return f"{step.id} = {step.obj}"
    rule = {"line_through": "line through", "parallel_through": "parallel to {0} through {1}",
            "intersect": "{0} meet {1}"}[step.op]
    how = rule.format(*step.args) if "{" in rule else f"{rule} {' and '.join(step.args)}"
    if step.kind == "line":
        return f"{step.id} = {how}: base {step.obj.base}, dir {step.obj.dir}"
    return f"{step.id} = {how} = {step.obj}"


def cmd_construct(args) -> int:
    f = args.field
    frame = LineFrame.standard(f)
    a, b = parse_scalar(args.a, f), parse_scalar(args.b, f)
    aux = parse_point(args.aux, f) if args.aux else None
    op = geometric_add if args.op == "add" else geometric_mul
    C, trace = op(frame, point_of(frame, a), point_of(frame, b), aux)
    print(f"frame: O = {frame.O}, I = {frame.I}")
    print(f"A = {trace['A']} (label {a}), B = {trace['B']} (label {b})")
    for n in trace.algorithm_steps():
        print(f"Step.{n}")
        for s in trace.steps:
            if s.step == n:
                print("  " + _describe(s))
    if trace["P1"] == trace["B1"]:
        print("note: P1 = B1")
    print(f"result: {format_scalar(label(frame, C))}")
    if args.trace:
        Path(args.trace).write_text(trace.to_json() + "\n", encoding="utf-8")
    if args.svg:
        emit_svg(trace, args.svg)
    return 0


def cmd_verify(args) -> int:
    options = {"bound": args.bound}
    if args.mutation:
        options["mutation"] = args.mutation
    if args.parts:
        key = harness.SUITES[args.suite].option if args.suite in harness.SUITES else None
        if key is None:
            raise UsageError(f"suite {args.suite} has no selectable parts")
        options[key] = [p.strip() for p in args.parts.split(",") if p.strip()]
    cfg = harness.SuiteConfig(args.suite, args.field, args.samples,
                              args.seed if args.seed is not None else _default_seed(), options)
    report = harness.run_suite(cfg, workers=args.workers, timing=args.timing)
    print(report.to_json() if args.json else report.to_text())
    return 1 if report.failed else 0


def cmd_conformance(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    seed = args.seed if args.seed is not None else _default_seed()
    doc = harness.conformance_report(seed=seed, samples=args.samples)
    text = json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    sys.stdout.write(text if args.json else harness.conformance_text(doc))
    return 0


def cmd_render(args) -> int:
    try:
        trace = ConstructionTrace.from_json(Path(args.trace).read_text(encoding="utf-8"))
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read trace {args.trace}: {exc}") from exc
    trace.replay()
    emit_svg(trace, args.out)
    return 0


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crossline", description="Exact cross-ratio calculus over skew fields.")
    sub = p.add_subparsers(dest="command", required=True)

    def field_opt(sp):
        sp.add_argument("--field", type=_field, default="rat", help="rat, gauss or quat (default rat)")

    sp = sub.add_parser("cr", help="cross-ratio of four labels")
    field_opt(sp)
    sp.add_argument("--points", required=True, help='"A;B;C;D", one slot may be inf')
    sp.set_defaults(func=cmd_cr)

    sp = sub.add_parser("ratio", help="ratio of two or three labels")
    field_opt(sp)
    sp.add_argument("--points", required=True, help='"A;B" for r(A:B) or "A;B;C" for r(A,B;C)')
    sp.set_defaults(func=cmd_ratio)

    sp = sub.add_parser("construct", help="run the addition or multiplication construction")
    field_opt(sp)
    sp.add_argument("--op", choices=("add", "mul"), required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--aux", help='auxiliary point B1 as "[x ; y]"')
    sp.add_argument("--svg", help="write an SVG drawing (rational field only)")
    sp.add_argument("--trace", help="write the construction trace as JSON")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="run a seeded verification suite")
    field_opt(sp)
    sp.add_argument("--suite", required=True, help=", ".join(harness.SUITES))
    sp.add_argument("--samples", type=int, default=200, help="samples per part (default 200)")
    sp.add_argument("--seed", type=int, default=None, help="default: $CROSSLINE_SEED or 0")
    sp.add_argument("--json", action="store_true", help="print the JSON report")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="record wall time in the report")
    sp.add_argument("--bound", type=int, default=harness.DEFAULT_BOUND, help="coefficient bound")
    sp.add_argument("--parts", help="comma-separated subset (identities, kinds, cases or ops)")
    sp.add_argument("--mutation", choices=harness.mutations.MUTATIONS, help="run against a broken variant")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("conformance", help="identity x field conformance report")
    sp.add_argument("--seed", type=int, default=None, help="default: $CROSSLINE_SEED or 0")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--out", help="write the JSON document here")
    sp.add_argument("--json", action="store_true", help="print JSON instead of the table")
    sp.set_defaults(func=cmd_conformance)

    sp = sub.add_parser("render", help="render a saved construction trace as SVG")
    sp.add_argument("trace", help="trace JSON written by construct --trace")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ScalarError, PlaneError, ConstructionError, UnsupportedFieldError,
            harness.SuiteError) as exc:
        print(f"crossline {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
