"""Command-line entry point: ``hgi delta|census|verify|ci``.

Exit status: 0 when every check passes, 1 when one fails, 2 for bad
parameters or input, 3 when a computation budget was exceeded.  The last
line written to standard output is always a ``RESULT`` summary.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomposition.census import census
from .decomposition.sampling import NOTE
from .decomposition.suites import SUITES, run_suite
from .exactalg.groebner import CHECK_BUDGET, Budget, BudgetExceeded
from .hypergraph.ci import CIModel, UnsupportedStatement, ci_statement_to_hypergraph
from .hypergraph.core import build_delta

EXIT_PASS, EXIT_FAIL, EXIT_PARAMS, EXIT_BUDGET = 0, 1, 2, 3


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=2)
    common.add_argument("--l", type=int, default=5)
    common.add_argument("--d", type=int, default=3)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--budget-degree", type=int, default=CHECK_BUDGET.max_degree)
    common.add_argument("--budget-pairs", type=int, default=CHECK_BUDGET.max_pairs)

    p = argparse.ArgumentParser(prog="hgi", description="Determinantal hypergraph ideals.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("delta", parents=[common], help="print the hypergraph Delta(k,l)")
    sub.add_parser("census", parents=[common], help="minimal prime components by symmetry class")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    c = sub.add_parser("ci", parents=[common], help="translate a CI model file to a hypergraph")
    c.add_argument("model_file")
    return p


class _Report:
    def __init__(self, args):
        self.args = args
        self.body: list[str] = []

    def emit(self, text: str):
        self.body.append(text)

    def finish(self, summary: str):
        text = "\n".join(self.body)
        if self.args.out:
            with open(self.args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        elif text:
            print(text)
        print(summary)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_delta(args, rep: _Report) -> int:
    h = build_delta(args.k, args.l)
    if args.format == "json":
        rep.emit(_json(h.to_json()))
    else:
        rep.emit(f"Delta({args.k},{args.l}) on [{h.n}], {len(h.edges)} edges")
        rep.emit("\n".join("{" + ",".join(map(str, e)) + "}" for e in h.sorted_edges()))
    rep.finish(f"RESULT status=pass command=delta k={args.k} l={args.l} edges={len(h.edges)}")
    return EXIT_PASS


def cmd_census(args, rep: _Report) -> int:
    report = census(args.k, args.l, args.d)
    rep.emit(report.dumps() if args.format == "json" else report.table())
    rep.finish(f"RESULT status=pass command=census k={args.k} l={args.l} d={args.d} "
               f"classes={len(report.classes)} total={report.total}")
    return EXIT_PASS


def cmd_verify(args, rep: _Report) -> int:
    budget = Budget(args.budget_degree, args.budget_pairs)
    names = SUITES if args.suite == "all" else (args.suite,)
    checks = []
    for name in names:
        checks += run_suite(name, args.k, args.l, args.d, args.seed, budget)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        rep.emit(_json({"checks": [c.to_json() for c in checks], "note": NOTE}))
    else:
        for c in checks:
            rep.emit(f"{'PASS' if c.passed else 'FAIL'}  {c.suite:<11} {c.name}")
        if {"sampling", "containment"} & set(names):
            rep.emit(f"note: {NOTE}")
    status = "pass" if not failed else "fail"
    rep.finish(f"RESULT status={status} command=verify suite={args.suite} "
               f"checks={len(checks)} passed={len(checks) - len(failed)} failed={len(failed)}")
    return EXIT_PASS if not failed else EXIT_FAIL


def _matching_delta(n: int, edges) -> tuple[int, int] | None:
    for k in range(2, n + 1):
        if n % k == 0 and n // k >= 3 and build_delta(k, n // k).edges == edges:
            return k, n // k
    return None


def cmd_ci(args, rep: _Report) -> int:
    try:
        with open(args.model_file, encoding="utf-8") as fh:
            model = CIModel.loads(fh.read())
    except OSError as exc:
        raise ValueError(f"cannot read {args.model_file}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {args.model_file}: {exc}") from exc
    h = ci_statement_to_hypergraph(model)
    match = _matching_delta(h.n, h.edges)
    out = {"hypergraph": h.to_json(), "d": model.d, "delta": None}
    if match:
        k, l = match
        out["delta"] = {"k": k, "l": l,
                        "census": f"hgi census --k {k} --l {l} --d {model.d}",
                        "hidden_intersection_component": "I_0, the unique component without variables"
                                                         " among its generators"}
    if args.format == "json":
        rep.emit(_json(out))
    else:
        rep.emit(f"{len(h.edges)} edges on [{h.n}], d={model.d}")
        rep.emit("\n".join("{" + ",".join(map(str, e)) + "}" for e in h.sorted_edges()))
        if match:
            rep.emit(f"equals Delta({match[0]},{match[1]}); components: {out['delta']['census']}")
            rep.emit(f"hidden intersection axiom component: {out['delta']['hidden_intersection_component']}")
    tag = f"delta={match[0]}x{match[1]}" if match else "delta=none"
    rep.finish(f"RESULT status=pass command=ci edges={len(h.edges)} {tag}")
    return EXIT_PASS


COMMANDS = {"delta": cmd_delta, "census": cmd_census, "verify": cmd_verify, "ci": cmd_ci}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    rep = _Report(args)
    try:
        return COMMANDS[args.command](args, rep)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        print(f"RESULT status=budget-exceeded command={args.command}")
        return EXIT_BUDGET
    except (ValueError, UnsupportedStatement) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"RESULT status=error command={args.command}")
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
