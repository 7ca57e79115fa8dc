"""Command-line entry point.

Exit codes: 0 when the query was answered and every check passed, 1 when a
checked property is violated or a formula is refuted, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import checker, completeness, yablo
from .formula import ParseError, debug_repr, parse, render
from .model import EnumSpec, InfeasibleSpecError, ModelError, UnknownWorldError, load
from .paradox import bk_narrative
from .semantics import evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(args, human: str, payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False) if args.json else human)


def cmd_parse(args) -> int:
    f = parse(args.formula)
    rendered = render(f)
    _emit(args, f"ast: {debug_repr(f)}\nrendered: {rendered}",
          {"ast": debug_repr(f), "rendered": rendered, "roundtrip": parse(rendered) == f})
    return EXIT_OK


def cmd_eval(args) -> int:
    m = load(args.model)
    value = evaluate(m, args.time, args.world, parse(args.formula))
    _emit(args, str(value).lower(), {"time": args.time, "world": args.world,
                                     "formula": args.formula, "value": value})
    return EXIT_OK


def cmd_check(args) -> int:
    m = load(args.model)
    f = parse(args.formula)
    if args.valid:
        w = checker.valid(m, f)
        verdict, failed = ("valid", False) if w is None else ("refuted", True)
    else:
        w = checker.satisfiable(m, f)
        verdict, failed = ("unsatisfiable", True) if w is None else ("satisfiable", False)
    witness = w.to_dict() if w else None
    payload = {"model": m.to_dict(), "formula": render(f), "verdict": verdict, "witness": witness}
    _emit(args, f"{verdict}\nwitness: {json.dumps(witness)}", payload)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_theorems(args) -> int:
    spec = EnumSpec.parse(args.enum)
    sweep = checker.sweep_theorems(spec, jobs=args.jobs)
    _emit(args, sweep.summary(), sweep.to_dict())
    return EXIT_OK if sweep.ok else EXIT_FAIL


def cmd_complete(args) -> int:
    if args.model:
        report = completeness.is_complete(load(args.model), args.depth)
        d = report.to_dict()
        if report.complete:
            human = f"complete at depth {args.depth}"
        else:
            w = d["witness"]
            human = (f"incomplete at depth {args.depth}: the sort-{w['sort']} set "
                     f"{{{', '.join(w['set'])}}} defined by {w['formula']} is assumed by no "
                     f"world of the other sort")
        _emit(args, human, d)
        return EXIT_OK
    spec = EnumSpec.parse(args.enum)
    sweep = completeness.bk_sweep(spec, args.depth, jobs=args.jobs)
    human = (f"{sweep.models_total} models ({spec}), depth {args.depth}: "
             f"{sweep.models_incomplete} incomplete, {len(sweep.complete_models)} complete")
    flagged = sweep.complete_models and args.depth >= 1
    if flagged:
        human += "\nWARNING: complete models found; inspect them with --json"
    _emit(args, human, sweep.to_dict())
    return EXIT_FAIL if flagged else EXIT_OK


def cmd_bk_demo(args) -> int:
    sys.stdout.write(bk_narrative())
    return EXIT_OK


def cmd_yablo(args) -> int:
    if args.finite is not None:
        found = yablo.finite_yablo(args.finite)
        human = "\n".join(
            "".join("T" if v else "F" for v in a.prefix) for a in found
        ) + f"\n{len(found)} consistent assignment(s) for N={args.finite}"
        _emit(args, human, {"n": args.finite, "assignments": [a.to_dict() for a in found]})
        return EXIT_OK
    try:
        p, l = (int(s) for s in args.periodic.split(","))
    except ValueError:
        raise _UsageError("--periodic expects PREFIX,LOOP") from None
    found = yablo.periodic_yablo(p, l)
    human = (f"no consistent assignment with prefix {p}, loop {l}" if found is None
             else f"consistent assignment found: {found.to_dict()}")
    _emit(args, human, {"prefix_len": p, "loop_len": l,
                        "assignment": found.to_dict() if found else None})
    return EXIT_OK if found is None else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                      help="worker processes for sweeps")

    p = _Parser(prog="italcheck", description="iTAL model checker and paradox toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("parse", parents=[common], help="parse and re-render a formula")
    s.add_argument("formula")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("eval", parents=[common], help="evaluate a formula at one point")
    s.add_argument("--model", required=True)
    s.add_argument("--time", type=int, required=True)
    s.add_argument("--world", required=True)
    s.add_argument("formula")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check", parents=[common], help="model-level validity or satisfiability")
    s.add_argument("--model", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--valid", action="store_true")
    g.add_argument("--sat", action="store_true")
    s.add_argument("formula")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("theorems", parents=[common, jobs], help="sweep both theorems")
    s.add_argument("--enum", required=True, help='e.g. "a=2,b=2,prefix=0,loop=2,strict"')
    s.set_defaults(func=cmd_theorems)

    s = sub.add_parser("complete", parents=[common, jobs], help="completeness report or sweep")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--model")
    g.add_argument("--enum")
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_complete)

    s = sub.add_parser("bk-demo", parents=[common], help="walk through the BK configuration")
    s.set_defaults(func=cmd_bk_demo)

    s = sub.add_parser("yablo", parents=[common], help="Yablo assignment solver")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--finite", type=int, metavar="N")
    g.add_argument("--periodic", metavar="P,L")
    s.set_defaults(func=cmd_yablo)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except ModelError as exc:
        print("invalid model:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
    except (UnknownWorldError, InfeasibleSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
