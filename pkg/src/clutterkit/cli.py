"""Command-line interface exposing every engine capability.

Exit codes: 0 success / true, 1 false / none (minor absent, UNSAT, a law
failed), 2 usage or input error, 3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import shlex
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

from .blocker import blocker, maximal_independent_sets
from .bounds import BoundParams, blocker_size_bound, class_membership, verify_bound
from .core import Clutter
from .errors import ParseError, ResourceLimitError
from .formats import (
    format_semi_matching,
    parse_clutter,
    parse_dimacs,
    parse_semi_matching,
    parse_setcover,
    serialize_clutter,
)
from .generate import kk2, random_clutter, staircase
from .laws import run_law_suite
from .matching import (
    MinorWitness,
    enumerate_semi_matchings,
    extract_minor_matching,
    find_kk2_minor,
)
from .reductions import MonotoneOracle, solve_sat, solve_setcover


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_clutter(path: str) -> Clutter:
    return parse_clutter(_read_text(path))


def _print_witness(w: MinorWitness) -> None:
    print("delete:", " ".join(map(str, w.delete)))
    print("contract:", " ".join(map(str, w.contract)))
    for pair in w.matching:
        print("pair:", " ".join(map(str, pair)))


def cmd_blocker(args) -> int:
    h = _load_clutter(args.file)
    print(serialize_clutter(blocker(h, edge_budget=args.budget)), end="")
    return 0


def cmd_indep(args) -> int:
    h = _load_clutter(args.file)
    for s in maximal_independent_sets(h, edge_budget=args.budget):
        print(" ".join(map(str, s)))
    return 0


def cmd_minor(args) -> int:
    h = _load_clutter(args.file)
    witness = find_kk2_minor(h, args.k, node_budget=args.budget)
    if witness is None:
        print("none")
        return 1
    if args.witness:
        _print_witness(witness)
    else:
        print("found")
    return 0


def cmd_semimatchings(args) -> int:
    h = _load_clutter(args.file)
    matchings = enumerate_semi_matchings(h, budget=args.budget)
    if args.list:
        for m in matchings:
            print(format_semi_matching(m))
    else:
        print(len(matchings))
    return 0


def cmd_extract(args) -> int:
    h = _load_clutter(args.file)
    matching = parse_semi_matching(_read_text(args.matching))
    print(format_semi_matching(extract_minor_matching(h, matching)))
    return 0


def cmd_bound(args) -> int:
    h = _load_clutter(args.file)
    if args.verify:
        report = verify_bound(h, args.k, edge_budget=args.budget, node_budget=args.budget)
        payload = report.as_dict()
        ok = bool(report.within_bound)
    else:
        params = BoundParams(len(h), h.rank(), args.k)
        payload = {"edges": params.edge_count, "r": params.r, "k": params.k,
                   "bound": blocker_size_bound(params)}
        ok = True
    if args.json:
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return 0 if ok else 1


def cmd_membership(args) -> int:
    h = _load_clutter(args.file)
    member = class_membership(h, args.r, args.k, node_budget=args.budget)
    if args.json:
        print(json.dumps({"r": args.r, "k": args.k, "rank": h.rank(), "member": member}))
    else:
        print("true" if member else "false")
    return 0 if member else 1


def _command_oracle(cmd: str) -> MonotoneOracle:
    argv = shlex.split(cmd)

    def evaluate(names: frozenset):
        payload = " ".join(str(n) for n in sorted(names, key=str)) + "\n"
        proc = subprocess.run(argv, input=payload, capture_output=True, text=True, check=True)
        return Fraction(proc.stdout.strip())

    return MonotoneOracle(evaluate)


def cmd_solve_setcover(args) -> int:
    inst = parse_setcover(_read_text(args.file))
    if args.oracle_cmd:
        cover, cost = solve_setcover(
            inst, "oracle", oracle=_command_oracle(args.oracle_cmd), edge_budget=args.budget
        )
    elif args.weighted:
        cover, cost = solve_setcover(inst, "weighted", edge_budget=args.budget)
    else:
        cover, cost = solve_setcover(inst, "cardinality", edge_budget=args.budget)
    print("cover:", " ".join(map(str, cover)))
    print("cost:", cost)
    return 0


def cmd_solve_sat(args) -> int:
    formula = parse_dimacs(_read_text(args.file))
    assignment = solve_sat(formula, edge_budget=args.budget)
    if assignment is None:
        print("UNSATISFIABLE")
        return 1
    print("SATISFIABLE")
    print("v", " ".join(map(str, assignment.as_literals())), "0")
    return 0


def cmd_gen(args) -> int:
    if args.family == "kk2":
        if args.k is None:
            raise ValueError("family kk2 requires --k")
        h = kk2(args.k)
    elif args.family == "staircase":
        if args.n is None:
            raise ValueError("family staircase requires --n")
        h = staircase(args.n)
    else:
        if None in (args.n, args.m, args.r):
            raise ValueError("family random requires --n, --m and --r")
        h = random_clutter(args.n, args.m, args.r, args.seed)
    print(serialize_clutter(h), end="")
    return 0


def cmd_laws(args) -> int:
    results = run_law_suite(args.samples, args.seed)
    all_ok = True
    for res in results:
        status = "ok" if res.ok else "FAILED"
        print(f"{res.name}: {status} ({res.samples} samples)")
        if not res.ok:
            all_ok = False
            if res.detail:
                print(f"  counterexample: {res.detail}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clutterkit",
        description="Exact clutter algebra: blockers, minors, matchings, bounds, solvers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, file_arg=True, budget=True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if budget:
            p.add_argument("--budget", type=int, default=10**6,
                           help="resource budget for the underlying engine call")
        if file_arg:
            p.add_argument("file", nargs="?", default="-",
                           help="input file ('-' for stdin)")
        return p

    add("blocker", cmd_blocker, "print the clutter of minimal transversals")
    add("indep", cmd_indep, "print all maximal independent sets")

    p = add("minor", cmd_minor, "search for a matching minor of k pairs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="print the witness")

    p = add("semimatchings", cmd_semimatchings, "enumerate semi-matchings")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="print the count (default)")
    group.add_argument("--list", action="store_true", help="print one matching per line")

    p = add("extract", cmd_extract,
            "thin a semi-matching to an expanded minor matching", budget=False)
    p.add_argument("--matching", required=True, help="file holding the semi-matching")

    p = add("bound", cmd_bound, "evaluate the blocker-size bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="also compute the blocker and compare")
    p.add_argument("--json", action="store_true")

    p = add("membership", cmd_membership, "test rank and matching-minor-freeness")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("solve-setcover", cmd_solve_setcover, "minimum cover via blocker scan")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--weighted", action="store_true")
    group.add_argument("--oracle-cmd",
                       help="external cost command: candidate on stdin, rational on stdout")

    add("solve-sat", cmd_solve_sat, "satisfiability via blocker scan (DIMACS input)")

    p = add("gen", cmd_gen, "emit a built-in family", file_arg=False, budget=False)
    p.add_argument("--family", required=True, choices=["kk2", "staircase", "random"])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int, default=0)

    p = add("laws", cmd_laws, "run the algebraic identity suite",
            file_arg=False, budget=False)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError, subprocess.CalledProcessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
