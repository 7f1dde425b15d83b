"""The besg command line.

Subcommands: solve, build, minimise, normalise, to-bes, dot, encode, mc,
lts-min, abstract, pipeline, check.  Exit codes: 0 success, 1 usage error,
2 parse error, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bes import bnd
from .bisim import bisim_minimise
from .checks import ALL_SUITES, run_all
from .errors import BesgError, ParseError, PreconditionError
from .mucalc import (abstract, encode, is_safe_abstraction,
                     lts_bisim_minimise, mc_semantics)
from .pipeline import run_pipeline
from .sgraph import normalise
from .solve import Environment, solution_on_bound
from .sos import build
from .textio import (parse_aut, parse_bes, parse_formula, parse_mu_formula,
                     parse_sg, print_aut, print_bes, print_dot, print_sg)
from .translate import to_bes


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise _UsageError(str(e)) from e


def _parse_env(pairs: list[str]) -> Environment:
    assignment = {}
    for pair in pairs:
        if "=" not in pair:
            raise _UsageError(f"--env expects NAME=true|false, got {pair!r}")
        name, value = pair.split("=", 1)
        if value not in ("true", "false"):
            raise _UsageError(f"--env expects NAME=true|false, got {pair!r}")
        assignment[name] = value == "true"
    return Environment(assignment)


def _emit_sg(sg, fmt: str) -> str:
    if fmt == "dot":
        return print_dot(sg)
    if fmt == "json":
        return json.dumps({
            "root": sg.root,
            "vertices": [{
                "id": v,
                "dec": sg.dec[v].value if v in sg.dec else None,
                "rank": sg.rank.get(v),
                "fv": sg.fv.get(v),
            } for v in sg.vertices],
            "edges": [[u, w] for (u, w) in sg.edges()],
        }, indent=2) + "\n"
    return print_sg(sg)


def _build_parser() -> _Parser:
    parser = _Parser(prog="besg")
    parser.add_argument("--format", choices=["text", "dot", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve")
    p.add_argument("bes")
    p.add_argument("--var", action="append", default=[])
    p.add_argument("--env", action="append", default=[])
    p.add_argument("--method", choices=["recursive", "gauss"], default="gauss")

    p = sub.add_parser("build")
    p.add_argument("bes")
    p.add_argument("--root", required=True)

    for name in ("minimise", "normalise", "to-bes", "dot"):
        p = sub.add_parser(name)
        p.add_argument("sg")

    p = sub.add_parser("encode")
    p.add_argument("lts")
    p.add_argument("phi")

    p = sub.add_parser("mc")
    p.add_argument("lts")
    p.add_argument("phi")
    p.add_argument("--state")
    p.add_argument("--theta", action="append", default=[])

    p = sub.add_parser("lts-min")
    p.add_argument("lts")

    p = sub.add_parser("abstract")
    p.add_argument("lts")
    p.add_argument("--hide", required=True)
    p.add_argument("--check-safe")

    p = sub.add_parser("pipeline")
    p.add_argument("lts")
    p.add_argument("phi")
    p.add_argument("--root-state")
    p.add_argument("--no-normalise", action="store_true")
    p.add_argument("--method", choices=["recursive", "gauss"], default="gauss")

    p = sub.add_parser("check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", choices=sorted(ALL_SUITES), default=[])
    return parser


def _dispatch(args, out) -> int:
    fmt = args.format
    if args.command == "solve":
        system = parse_bes(_read(args.bes))
        env = _parse_env(args.env)
        solution = solution_on_bound(system, env, args.method)
        names = args.var or list(solution)
        unknown = [x for x in names if x not in bnd(system)]
        if unknown:
            raise PreconditionError(f"not bound in the system: {' '.join(unknown)}")
        picked = {x: solution[x] for x in solution if x in set(names)}
        if fmt == "json":
            out.write(json.dumps(picked, indent=2) + "\n")
        else:
            for x, b in picked.items():
                out.write(f"{x} = {str(b).lower()}\n")
        return 0

    if args.command == "build":
        system = parse_bes(_read(args.bes))
        root = parse_formula(args.root)
        out.write(_emit_sg(build(system, root), fmt))
        return 0

    if args.command in ("minimise", "normalise", "dot"):
        sg = parse_sg(_read(args.sg))
        if args.command == "minimise":
            sg, _ = bisim_minimise(sg)
        elif args.command == "normalise":
            sg = normalise(sg)
        out.write(_emit_sg(sg, "dot" if args.command == "dot" else fmt))
        return 0

    if args.command == "to-bes":
        sg = parse_sg(_read(args.sg))
        out.write(print_bes(to_bes(sg)))
        return 0

    if args.command == "encode":
        lts = parse_aut(_read(args.lts))
        phi = parse_mu_formula(_read(args.phi))
        out.write(print_bes(encode(lts, phi)))
        return 0

    if args.command == "mc":
        lts = parse_aut(_read(args.lts))
        phi = parse_mu_formula(_read(args.phi))
        theta = {}
        for item in args.theta:
            if "=" not in item:
                raise _UsageError(f"--theta expects NAME=s1,s2,..., got {item!r}")
            name, states = item.split("=", 1)
            theta[name] = frozenset(s for s in states.split(",") if s)
        sem = mc_semantics(lts, phi, theta)
        if args.state is not None:
            if args.state not in lts.states:
                raise PreconditionError(f"unknown state: {args.state}")
            out.write(f"{str(args.state in sem).lower()}\n")
        elif fmt == "json":
            out.write(json.dumps(sorted(sem)) + "\n")
        else:
            out.write(" ".join(sorted(sem)) + "\n")
        return 0

    if args.command == "lts-min":
        lts = parse_aut(_read(args.lts))
        quotient, _ = lts_bisim_minimise(lts)
        out.write(print_aut(quotient))
        return 0

    if args.command == "abstract":
        lts = parse_aut(_read(args.lts))
        hidden = [a for a in args.hide.split(",") if a]
        if args.check_safe:
            phi = parse_mu_formula(_read(args.check_safe))
            safe = is_safe_abstraction(lts, hidden, phi)
            out.write(f"safe: {str(safe).lower()}\n")
        out.write(print_aut(abstract(lts, hidden)))
        return 0

    if args.command == "pipeline":
        lts = parse_aut(_read(args.lts))
        phi = parse_mu_formula(_read(args.phi))
        report = run_pipeline(lts, phi, root_state=args.root_state,
                              do_normalise=not args.no_normalise, method=args.method)
        if fmt == "json":
            payload = {k: v for k, v in report.__dict__.items() if k != "timings"}
            payload["mc_states"] = list(report.mc_states or [])
            out.write(json.dumps(payload, indent=2, default=str) + "\n")
        else:
            for line in report.lines():
                out.write(line + "\n")
        return 0

    if args.command == "check":
        results = run_all(args.seed, args.suite or None)
        failed = False
        for r in results:
            status = "ok" if r.ok else "FAIL"
            out.write(f"{r.name}: {r.cases} cases, {status}\n")
            for msg in r.failures[:5]:
                out.write(f"  {msg}\n")
            failed = failed or not r.ok
        return 3 if failed else 0

    raise _UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, out)
    except _UsageError as e:
        print(f"besg: {e}", file=sys.stderr)
        return 1
    except ParseError as e:
        print(f"besg: {e}", file=sys.stderr)
        return 2
    except (PreconditionError, BesgError, ValueError) as e:
        print(f"besg: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
