"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 invariant violation, 3 infeasible instance.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .cutlp import InfeasibleInstance, fractional_edges, solve_cut_lp
from .experiment import SuiteSpecError, check_report, report_csv, report_json, run_experiment
from .generators import gen_bad_dfs_instance, gen_gap_instance, gen_random_instance
from .graph import validate_instance
from .io import (InstanceFormatError, dumps_instance, dumps_json, fmt_q, load_instance, lp_to_dict,
                 report_to_dict, save_instance)
from .oracle import BudgetExceeded, exact_cut_lp_enumeration, exact_opt
from .pipeline import SolveOptions, solve

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_valid(path: str):
    try:
        inst = load_instance(path)
    except (OSError, InstanceFormatError) as exc:
        raise UsageError(str(exc)) from exc
    report = validate_instance(inst)
    if not report.ok:
        for v in report.violations:
            print(f"invalid instance: {v}", file=sys.stderr)
        raise InfeasibleInstance("; ".join(report.violations))
    return inst


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_solve(args) -> int:
    inst = _load_valid(args.file)
    try:
        gamma = Fraction(args.gamma)
    except ValueError as exc:
        raise UsageError(f"bad --gamma: {exc}") from exc
    if gamma <= 0:
        raise UsageError("--gamma must be positive")
    opts = SolveOptions(gamma=gamma, diagnostics=args.diagnostics,
                        oracle=args.oracle, guided=not args.unguided,
                        augment_from_all_edges=args.all_edges)
    h, rep = solve(inst, args.root, opts)
    doc = report_to_dict(h, rep)
    problems = check_report(inst, h, rep)
    doc["violations"] = problems
    if args.json:
        _write(dumps_json(doc), args.json)
    line = (f"lp={fmt_q(rep.lp_cost)} total={rep.total_cost} tree={rep.tree_heavy_cost} "
            f"aug={rep.aug_size} ratio_vs_lp={fmt_q(rep.ratio_vs_lp)}")
    if rep.opt_cost is not None:
        line += f" opt={rep.opt_cost} ratio_vs_opt={fmt_q(rep.ratio_vs_opt)}"
    if args.json != "-":
        print(line)
    for p in problems:
        print(f"violation: {p}", file=sys.stderr)
    return EXIT_INVARIANT if problems else EXIT_OK


def cmd_lp(args) -> int:
    inst = _load_valid(args.file)
    sol = solve_cut_lp(inst)
    doc = lp_to_dict(sol)
    doc["fractional_edges"] = fractional_edges(sol.x)
    doc["basic"] = sol.is_basic(inst.graph)
    status = EXIT_OK if doc["basic"] else EXIT_INVARIANT
    if args.exact_check:
        ref = exact_cut_lp_enumeration(inst)
        doc["enumerated_objective"] = fmt_q(ref)
        doc["exact_match"] = ref == sol.objective
        if ref != sol.objective:
            status = EXIT_INVARIANT
    sys.stdout.write(dumps_json(doc))
    return status


def cmd_oracle(args) -> int:
    inst = _load_valid(args.file)
    try:
        res = exact_opt(inst, args.budget)
    except BudgetExceeded as exc:
        print(f"budget exceeded: optimum in [{exc.lower}, {exc.upper}]", file=sys.stderr)
        return EXIT_INVARIANT
    sys.stdout.write(dumps_json({"opt_cost": res.opt_cost, "witness": sorted(res.witness),
                                 "nodes_explored": res.nodes_explored}))
    return EXIT_OK


def cmd_gen(args) -> int:
    p = args.params
    try:
        if args.family == "gap":
            inst = gen_gap_instance(int(p[0]) if p else 1)
        elif args.family == "baddfs":
            if len(p) != 1:
                raise UsageError("gen baddfs takes one parameter: depth")
            inst = gen_bad_dfs_instance(int(p[0]))
        else:
            if len(p) != 4:
                raise UsageError("gen random takes: n extra_heavy matching_fraction seed")
            inst = gen_random_instance(int(p[0]), int(p[1]), float(p[2]), int(p[3]))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.output:
        save_instance(inst, args.output)
    else:
        sys.stdout.write(dumps_instance(inst))
    return EXIT_OK


def cmd_experiment(args) -> int:
    try:
        spec = json.loads(Path(args.spec).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read suite spec: {exc}") from exc
    if args.workers is not None:
        spec["workers"] = args.workers
    try:
        rows, summary = run_experiment(spec)
    except SuiteSpecError as exc:
        raise UsageError(str(exc)) from exc
    if args.csv:
        _write(report_csv(rows), args.csv)
    json_out = args.json or spec.get("output")
    if json_out:
        _write(dumps_json(report_json(rows, summary)), json_out)
    print(dumps_json(summary), end="", file=sys.stderr if json_out == "-" or args.csv == "-" else sys.stdout)
    return EXIT_OK if summary["all_ok"] else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mapaug", description="LP-guided DFS algorithm for the matching augmentation problem")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="run the LP-based algorithm on an instance file")
    s.add_argument("file")
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--gamma", default="1/1000", help="tightness parameter, e.g. 1/1000")
    s.add_argument("--diagnostics", action="store_true")
    s.add_argument("--oracle", action="store_true", help="also compute the exact optimum")
    s.add_argument("--unguided", action="store_true", help="plain lexicographic DFS baseline")
    s.add_argument("--all-edges", action="store_true",
                   help="let the augmentation use non-support uplinks of G")
    s.add_argument("--json", metavar="OUT", help="write the JSON report ('-' for stdout)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("lp", help="solve the cut LP exactly")
    s.add_argument("file")
    s.add_argument("--exact-check", action="store_true",
                   help="compare with the fully enumerated LP (n <= 12)")
    s.set_defaults(func=cmd_lp)

    s = sub.add_parser("oracle", help="exact integral optimum by branch and bound")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=5_000_000)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="write a generated instance")
    s.add_argument("family", choices=["gap", "baddfs", "random"])
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("experiment", help="run a suite spec")
    s.add_argument("spec")
    s.add_argument("--csv", metavar="OUT")
    s.add_argument("--json", metavar="OUT")
    s.add_argument("--workers", type=int)
    s.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleInstance as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
