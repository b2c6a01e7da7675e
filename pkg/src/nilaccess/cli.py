"""Command line interface.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import AlgebraKind, KindError, InvalidPartitionError, enumerate_partitions, is_distinguished
from .orders import ACCESSIBILITY, DOMINANCE, compare
from .partitions import Partition, PartitionError
from .render import to_dot, to_json, to_text
from .suite import SUITE, run_suite
from .witnesses import WITNESS_BUILDERS, WitnessConstructionError, WitnessParameterError, verify_witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _kind(tag: str, n: int) -> AlgebraKind:
    try:
        return AlgebraKind(tag, n)
    except KindError as exc:
        raise UsageError(str(exc)) from None


def _partition(kind: AlgebraKind, text: str) -> Partition:
    try:
        p = Partition.parse(text)
    except PartitionError as exc:
        raise UsageError(str(exc)) from None
    if p.size != kind.N:
        raise UsageError(f"{p} is not a partition of {kind.N}")
    return p


def cmd_list(args, out) -> int:
    kind = _kind(args.kind, args.N)
    parts = enumerate_partitions(kind)
    if args.format == "json":
        rows = [{"partition": str(p), "distinguished": is_distinguished(kind, p)} for p in parts]
        print(json.dumps(rows), file=out)
    else:
        for p in parts:
            print(f"{p}{' *' if is_distinguished(kind, p) else ''}", file=out)
    return EXIT_OK


def cmd_compare(args, out) -> int:
    kind = _kind(args.kind, args.N)
    p1, p2 = _partition(kind, args.source), _partition(kind, args.target)
    try:
        report = compare(kind, p1, p2)
    except InvalidPartitionError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(report.to_dict()), file=out)
    else:
        print(report.to_text(), file=out)
    return EXIT_OK


def cmd_diagram(args, out) -> int:
    kind = _kind(args.kind, args.N)
    render = {"text": to_text, "dot": to_dot, "json": to_json}[args.format]
    print(render(kind, args.order), file=out)
    return EXIT_OK


def _witness_params(pairs: list[str]) -> dict:
    params = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"witness parameters look like key=value, got {item!r}")
        params[key] = value
    return params


def cmd_witness(args, out) -> int:
    if args.name not in WITNESS_BUILDERS:
        raise UsageError(f"unknown witness {args.name!r}; choose from {', '.join(WITNESS_BUILDERS)}")
    build, names = WITNESS_BUILDERS[args.name]
    params = _witness_params(args.params)
    missing = [n for n in names if n not in params]
    extra = [k for k in params if k not in names]
    if missing or extra:
        raise UsageError(f"{args.name} takes {', '.join(names) or 'no parameters'}")
    try:
        w = build(params)
    except (WitnessParameterError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    except WitnessConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = verify_witness(w)
    if args.format == "json":
        print(w.to_json(), file=out)
    else:
        print(f"{w.name}  ({w.provenance})", file=out)
        print("x' =", file=out)
        print(w.x_prime.pretty(), file=out)
        print(f"weights: {w.lam}", file=out)
        print("limit =", file=out)
        print(w.limit().pretty(), file=out)
        print(f"source type {report.details['source_type']}, limit type {report.details['limit_type']}", file=out)
        print(report.summary(), file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify_suite(args, out) -> int:
    try:
        results = list(run_suite(args.seed, args.only))
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    n_fail = 0
    for item, rep in results:
        n_fail += not rep.passed
        if args.format == "json":
            continue
        status = "PASS" if rep.passed else "FAIL"
        detail = ", ".join(f"{k}={v}" for k, v in rep.details.items())
        print(f"{status} {item.tag}: {item.about}" + (f" [{detail}]" if detail else ""), file=out)
        for name in rep.failures:
            print(f"    failed check: {name}", file=out)
    if args.format == "json":
        print(json.dumps([{"tag": it.tag, "about": it.about, **rep.to_dict()} for it, rep in results]), file=out)
    else:
        print(f"{len(results) - n_fail}/{len(results)} items passed (seed {args.seed})", file=out)
    return EXIT_FAIL if n_fail else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def global_flags(p, default):
        # subcommands repeat the flags with suppressed defaults so either position works
        p.add_argument("--format", choices=("text", "dot", "json"), default=default("text"))
        p.add_argument("--seed", type=int, default=default(0))
        p.add_argument("--only", default=default(None), help="run a single verify-suite item by tag")

    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, lambda v: argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="nilaccess",
        description="Dominance and cocharacter accessibility of nilpotent orbits.",
    )
    global_flags(parser, lambda v: v)
    sub = parser.add_subparsers(dest="command", required=True)

    def kind_args(p):
        p.add_argument("kind", choices=("gl", "sl", "sp", "o"))
        p.add_argument("N", type=int)

    p = sub.add_parser("list", parents=[common], help="valid partitions, * marks distinguished orbits")
    kind_args(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("compare", parents=[common], help="compare two orbits")
    kind_args(p)
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("diagram", parents=[common], help="Hasse diagram of an order")
    kind_args(p)
    p.add_argument("--order", choices=(DOMINANCE, ACCESSIBILITY), default=ACCESSIBILITY)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("witness", parents=[common], help="build and verify a witness, e.g. sp-move1 m=3")
    p.add_argument("name", help=", ".join(WITNESS_BUILDERS))
    p.add_argument("params", nargs="*", help="key=value; list values comma-separated")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser(
        "verify-suite",
        parents=[common],
        help="run every check; tags: " + ", ".join(item.tag for item in SUITE),
    )
    p.set_defaults(func=cmd_verify_suite)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command in ("list", "compare", "witness") and args.format == "dot":
        print("error: --format dot is only available for diagram", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
