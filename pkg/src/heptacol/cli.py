"""Command-line entry point.

Exit codes: 0 decided (SAT or UNSAT, VALID, promise OK), 2 promise
violation, 1 usage, parse or internal error (also NOT_VALID).
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .Engine.engine_solver import Status
from .InstanceParser.emitter import emit_result
from .TestKit.kit_generators import KINDS, GenSpec
from .aux.exceptions import HeptacolError
from .aux.settings import MODES, SolverSettings
from .user.lcol_cmds import (SUITES, check_colouring, explain_promise, generate_instance, load_instance,
                             oracle_outcome, promise_dot, run_bench, solve_instance)

LOG = logging.getLogger("heptacol")

EXIT_OK, EXIT_ERROR, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 is reserved for promise violations."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _sizes(text: str):
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heptacol", description="List 3-colouring of {P7, triangle}-free graphs.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="decide list 3-colourability")
    p.add_argument("file")
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--parallel", type=int, default=None)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--debug", action="store_true", default=None)

    p = sub.add_parser("verify", help="check a colouring file against an instance")
    p.add_argument("file")
    p.add_argument("colouring_file")

    p = sub.add_parser("check-promise", help="look for a triangle or an induced P7")
    p.add_argument("file")
    p.add_argument("--explain", action="store_true")
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("generate", help="write a generated promise instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--sizes", type=_sizes, default=())
    p.add_argument("--list-prob", type=float, default=0.0)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--w-count", type=int, default=0)
    p.add_argument("--components", type=int, default=0)
    p.add_argument("--type2", action="store_true")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("oracle", help="decide by brute-force backtracking")
    p.add_argument("file")

    p = sub.add_parser("bench", help="run a benchmark suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _settings(args) -> SolverSettings:
    base = SolverSettings.from_env()
    return base.override(mode=getattr(args, "mode", None), parallel=getattr(args, "parallel", None),
                         debug=getattr(args, "debug", None))


def _cmd_solve(args, out) -> int:
    instance = load_instance(args.file)
    outcome = solve_instance(instance, _settings(args))
    out.write(emit_result(outcome, "json" if args.json else "text", with_stats=args.stats))
    if outcome.stats.fallback_used:
        LOG.warning("bipartite fallback used %d times; outside the polynomial bound", outcome.stats.fallback_used)
    return EXIT_INVALID if outcome.status is Status.INVALID else EXIT_OK


def _cmd_verify(args, out) -> int:
    instance = load_instance(args.file)
    with open(args.colouring_file) as fh:
        valid = check_colouring(instance, fh.read())
    out.write("VALID\n" if valid else "NOT_VALID\n")
    return EXIT_OK if valid else EXIT_ERROR


def _cmd_check_promise(args, out) -> int:
    instance = load_instance(args.file)
    report = explain_promise(instance.graph)
    if args.dot:
        dot = promise_dot(instance.graph)
        if dot is not None:
            out.write(dot)
    elif args.explain:
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    elif report["status"] == "OK":
        out.write("OK\n")
    else:
        out.write("INVALID\n" + report["witness"] + "\n")
    return EXIT_OK if report["status"] == "OK" else EXIT_INVALID


def _cmd_generate(args, out) -> int:
    settings = SolverSettings.from_env()
    spec = GenSpec(args.kind, args.sizes, seed=args.seed, list_prob=args.list_prob, density=args.density,
                   w_count=args.w_count, components=args.components, type2=args.type2,
                   budget=args.budget or settings.rejection_budget)
    out.write(generate_instance(spec))
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    instance = load_instance(args.file)
    out.write(oracle_outcome(instance).value + "\n")
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    for row in run_bench(args.suite, args.seed, SolverSettings.from_env()):
        out.write("c bench " + " ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    return EXIT_OK


COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "check-promise": _cmd_check_promise,
    "generate": _cmd_generate,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
}


def dispatch(argv: Optional[List[str]] = None, out=None) -> int:
    """Run one subcommand and return its exit code."""
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError as err:
        sys.stderr.write(f"{err}\n")
        return EXIT_ERROR
    if args.verbose:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose > 1 else logging.INFO,
                            format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (HeptacolError, OSError, ValueError) as err:
        sys.stderr.write(f"heptacol {args.command}: {err}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(dispatch())
