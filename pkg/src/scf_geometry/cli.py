"""
Command line front end: ``scf-geometry <command> [options]``.

Results go to standard output (or ``--out``), diagnostics to standard error.
Exit status is ``0`` on success, ``2`` for invalid input, ``3`` when an internal
invariant fails and ``4`` when a configured cap is exceeded.
"""

import argparse
import contextlib
import json
import logging
import sys
import typing

from .ablist import ABList, build_f_from_q, decompose, enumerate_ablists
from .config import DEFAULT_LIMITS, Limits
from .exceptions import DomainError, InvariantViolation, ResourceLimitExceeded
from .grid import Grid, GridFunction
from .profiles import Profile, eval_scf
from .quotas import (
    QuotaSequence,
    q_from_quotas,
    q_from_quotas_via_matrix,
    quota_rule_function,
    quotas_from_q,
    quotas_from_q_via_matrix,
)
from .render import SVGRenderer, render_ascii
from .serde import DeserializationError, decode_function, encode_ablist, encode_function
from .verify import SUITES, run

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INVARIANT = 3
EXIT_LIMIT = 4


def _society_size(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"society size must be nonnegative, got {n}")
    return n


def _dump(obj: typing.Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


@contextlib.contextmanager
def _output(path: typing.Optional[str]) -> typing.Iterator[typing.TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as f:
            yield f


def _read_json(path: typing.Optional[str]) -> typing.Any:
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except ValueError as e:
        # JSONDecodeError and UnicodeDecodeError
        raise DeserializationError(None, []) from e


def _join_profile_values(argv: typing.Sequence[str]) -> typing.List[str]:
    # a profile may start with "-", which argparse reads as an option
    result: typing.List[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--profile" and i + 1 < len(argv):
            result.append(f"--profile={argv[i + 1]}")
            i += 2
        else:
            result.append(argv[i])
            i += 1
    return result


def _rule(args: argparse.Namespace) -> ABList:
    if args.q is not None:
        return ABList.parse(args.q, args.n)
    return q_from_quotas(QuotaSequence.parse(args.k, args.n))


def _function(args: argparse.Namespace) -> GridFunction:
    if getattr(args, "table", None) is not None:
        return decode_function(_read_json(args.table))
    return build_f_from_q(_rule(args))


def cmd_build(args: argparse.Namespace, limits: Limits) -> int:
    f = build_f_from_q(_rule(args))
    with _output(args.out) as out:
        print(_dump(encode_function(f)), file=out)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, limits: Limits) -> int:
    f = build_f_from_q(_rule(args))
    with _output(args.out) as out:
        print(eval_scf(f, Profile.parse(args.profile)), file=out)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, limits: Limits) -> int:
    q = decompose(decode_function(_read_json(args.table)))
    with _output(args.out) as out:
        print(_dump(encode_ablist(q)), file=out)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace, limits: Limits) -> int:
    if args.q is not None:
        q = ABList.parse(args.q, args.n)
        ks = quotas_from_q(q)
        matrix_agrees = quotas_from_q_via_matrix(q) == ks
        result = f"k = {ks}"
    else:
        ks = QuotaSequence.parse(args.k, args.n)
        q = q_from_quotas(ks)
        matrix_agrees = q_from_quotas_via_matrix(ks) == q
        result = f"q = {q}"
    if not matrix_agrees:
        raise InvariantViolation(f"matrix and formula conversions of ({q}) / ({ks}) disagree")
    if quota_rule_function(ks) != build_f_from_q(q):
        raise InvariantViolation(f"the quota rule ({ks}) and f_q for q=({q}) differ")
    with _output(args.out) as out:
        print(result, file=out)
        print(
            f"verified: pointwise equal on all {q.grid.size} grid points; matrix path agrees",
            file=out,
        )
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, limits: Limits) -> int:
    g = Grid(args.n)
    if g.n > limits.list_sweep_n:
        raise ResourceLimitExceeded("{a,b}-list enumeration", g.n, limits.list_sweep_n)
    with _output(args.out) as out:
        for q in enumerate_ablists(g):
            print(_dump({"q": list(q.terms), "k": list(quotas_from_q(q).quotas)}), file=out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, limits: Limits) -> int:
    report = run(args.mode, Grid(args.n), limits, samples=args.samples)
    with _output(args.out) as out:
        print(report, file=out)
    if not report.ok:
        logger.error("verification failed for n=%d (%s)", args.n, args.mode)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_render(args: argparse.Namespace, limits: Limits) -> int:
    f = _function(args)
    if args.format == "svg":
        text = SVGRenderer(cell=args.cell).render(f)
    elif args.format == "ascii":
        text = render_ascii(f, limits)
    else:
        text = _dump(encode_function(f)) + "\n"
    with _output(args.out) as out:
        out.write(text)
    return EXIT_OK


def _add_rule_options(p: argparse.ArgumentParser, allow_table: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", help="{a,b}-list, e.g. 5,3,2,6,1,4")
    group.add_argument("--k", help="up-and-down quota sequence, e.g. 8,14,7,19,3,21")
    if allow_table:
        group.add_argument("--table", help="grid function JSON file ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log more (repeat for debug)"
    )
    common.add_argument("--seed", type=int, default=None, help="seed for randomized modes")
    common.add_argument("--out", default=None, help="write the result to this file")

    parser = argparse.ArgumentParser(
        prog="scf-geometry",
        description="anonymous strategy-proof binary social choice functions on the grid",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="tabulate the rule of a list or quotas")
    p.add_argument("--n", type=_society_size, required=True)
    _add_rule_options(p)
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("eval", parents=[common], help="evaluate a rule at a profile")
    p.add_argument("--n", type=_society_size, required=True)
    _add_rule_options(p)
    p.add_argument("--profile", required=True, help='one ballot per voter from "ab-"')
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("decompose", parents=[common], help="read the {a,b}-list off a table")
    p.add_argument("table", nargs="?", default=None, help="grid function JSON (default stdin)")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("convert", parents=[common], help="convert between lists and quotas")
    p.add_argument("--n", type=_society_size, required=True)
    _add_rule_options(p)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("enumerate", parents=[common], help="list every rule for n voters")
    p.add_argument("--n", type=_society_size, required=True)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run the consistency suites")
    p.add_argument("--n", type=_society_size, required=True)
    p.add_argument("--mode", choices=SUITES, default="full")
    p.add_argument("--samples", type=int, default=10000, help="random tables for --mode tfae")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="draw a rule")
    p.add_argument("--n", type=_society_size, default=None)
    _add_rule_options(p, allow_table=True)
    p.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    p.add_argument("--cell", type=int, default=20, help="SVG pixel pitch")
    p.set_defaults(handler=cmd_render)

    return parser


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]

    parser = build_parser()
    args = parser.parse_args(_join_profile_values(argv))
    if getattr(args, "table", None) is None and getattr(args, "n", 0) is None:
        parser.error("--n is required with --q or --k")

    logging.basicConfig(
        stream=sys.stderr,
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
    )
    limits = DEFAULT_LIMITS if args.seed is None else DEFAULT_LIMITS.replace(seed=args.seed)

    try:
        return args.handler(args, limits)
    except DeserializationError as e:
        if e.__cause__ is not None:
            print(f"error: malformed JSON: {e.__cause__}", file=sys.stderr)
        for item in e.errors:
            print(f"error: {item.pointer}: {item.message}", file=sys.stderr)
        return EXIT_INVALID
    except DomainError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantViolation as e:
        logger.error("%s", e.message)
        return EXIT_INVARIANT
    except ResourceLimitExceeded as e:
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
