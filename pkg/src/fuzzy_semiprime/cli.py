"""Command-line entry point.

Exit codes: 0 when every requested property holds (or a search completes
without contradicting a theorem), 1 when a requested property fails, 2 on
input or usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import gallery
from .calculus import GradeError, compose, format_grade, parse_grid
from .dsl import DSLError, load
from .search import GOALS, SearchTask, run_search
from .semiprime import (
    BudgetError,
    crisp_semiprime,
    def2_bruteforce,
    has_property_a,
    is_semiprime_def1,
    is_semiprime_def2,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fuzzy-semiprime", description="Fuzzy semiprime subsets of finite ordered groupoids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="parse and validate a structure file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")

    c = sub.add_parser("check", help="run semiprimeness deciders on a fuzzy subset")
    c.add_argument("file")
    c.add_argument("--fuzzy", required=True, metavar="NAME")
    c.add_argument("--def1", action="store_true")
    c.add_argument("--def2", action="store_true")
    c.add_argument("--property-a", action="store_true")
    c.add_argument("--oracle", metavar="GRIDSPEC", help="brute-force the order-theoretic check over this grade grid")
    c.add_argument("--json", action="store_true")

    m = sub.add_parser("compose", help="print the composition of two fuzzy subsets")
    m.add_argument("file")
    m.add_argument("--left", required=True, metavar="NAME")
    m.add_argument("--right", required=True, metavar="NAME")
    m.add_argument("--json", action="store_true")

    r = sub.add_parser("crisp", help="check a crisp subset for semiprimeness")
    r.add_argument("file")
    r.add_argument("--set", required=True, metavar="NAME")
    r.add_argument("--json", action="store_true")

    s = sub.add_parser("search", help="exhaustive search over small structures")
    s.add_argument("--max-n", type=int, required=True, metavar="K")
    s.add_argument("--grid", required=True, metavar="GRIDSPEC")
    s.add_argument("--goal", required=True, choices=GOALS)
    s.add_argument("--budget", type=int, default=10**8, metavar="M")
    s.add_argument("--json", action="store_true")

    g = sub.add_parser("paper", help="reproduce the two infinite counterexamples")
    which = g.add_mutually_exclusive_group(required=True)
    which.add_argument("--theorem4", action="store_true")
    which.add_argument("--remark6", action="store_true")
    g.add_argument("--window", type=int, default=1000, metavar="N")
    g.add_argument("--json", action="store_true")
    return p


def _emit(out, args, inputs, results, text_lines, extra=None):
    if args.json:
        doc = {"command": args.command, "inputs": inputs, "results": results}
        if extra:
            doc.update(extra)
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _report_line(report, label) -> str:
    d = report.as_dict(label)
    status = "holds" if d["holds"] else "FAILS"
    line = f"{d['checker']}: {status}"
    if d["witness"] is not None:
        line += "  witness " + json.dumps(d["witness"], sort_keys=True)
    return line


def _lookup(table, name, kind):
    if name not in table:
        raise UsageError(f"no {kind} named {name!r}")
    return table[name]


def cmd_validate(args, out):
    doc = load(args.file)
    inputs = {"file": args.file}
    results = [
        {"name": name, "elements": list(S.labels), "associative": S.is_associative(),
         "greatest": None if S.greatest_element() is None else S.labels[S.greatest_element()]}
        for name, S in doc.structures.items()
    ]
    lines = [
        f"{r['name']}: ok ({len(r['elements'])} elements, "
        f"{'associative' if r['associative'] else 'not associative'}, "
        f"greatest element {r['greatest'] or 'none'})"
        for r in results
    ]
    _emit(out, args, inputs, results, lines or ["no structures"])
    return EXIT_OK


def cmd_check(args, out):
    doc = load(args.file)
    f = _lookup(doc.fuzzies, args.fuzzy, "fuzzy subset").subset
    label = f.structure.labels.__getitem__
    selected = args.def1 or args.def2 or args.property_a or args.oracle
    reports = []
    if args.def1 or not selected:
        reports.append(is_semiprime_def1(f))
    if args.def2 or not selected:
        reports.append(is_semiprime_def2(f))
    if args.property_a or not selected:
        reports.append(has_property_a(f))
    if args.oracle:
        reports.append(def2_bruteforce(f, parse_grid(args.oracle)))
    inputs = {"file": args.file, "fuzzy": args.fuzzy}
    if args.oracle:
        inputs["oracle_grid"] = [format_grade(g) for g in parse_grid(args.oracle)]
    _emit(out, args, inputs, [r.as_dict(label) for r in reports], [_report_line(r, label) for r in reports])
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def cmd_compose(args, out):
    doc = load(args.file)
    f = _lookup(doc.fuzzies, args.left, "fuzzy subset").subset
    g = _lookup(doc.fuzzies, args.right, "fuzzy subset").subset
    try:
        h = compose(f, g)
    except ValueError as e:
        raise UsageError(str(e)) from None
    inputs = {"file": args.file, "left": args.left, "right": args.right}
    body = ", ".join(f"{k}: {v}" for k, v in h.as_labels().items())
    _emit(out, args, inputs, [{"composed": h.as_labels()}], [f"{args.left}*{args.right} = {{ {body} }}"])
    return EXIT_OK


def cmd_crisp(args, out):
    doc = load(args.file)
    _lookup(doc.sets, args.set, "set")
    S, T = doc.crisp(args.set)
    report = crisp_semiprime(S, T)
    label = S.labels.__getitem__
    _emit(out, args, {"file": args.file, "set": args.set}, [report.as_dict(label)], [_report_line(report, label)])
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_search(args, out):
    try:
        task = SearchTask(args.max_n, parse_grid(args.grid), args.goal, args.budget)
    except ValueError as e:
        raise UsageError(str(e)) from None
    result = run_search(task)
    inputs = {
        "max_n": task.max_n,
        "grid": [format_grade(g) for g in task.grade_grid],
        "goal": task.goal,
        "budget": task.budget,
    }
    hits = [h.as_dict() for h in result.found]
    lines = [
        f"goal {task.goal}: examined {result.examined}, found {len(hits)}, "
        f"{'exhausted' if result.exhausted else 'budget reached'}"
    ]
    lines += [json.dumps(h, sort_keys=True) for h in hits]
    _emit(out, args, inputs, hits, lines,
          {"examined": result.examined, "exhausted": result.exhausted})
    if task.goal in ("theorem4-scan", "theorem5-scan") and hits:
        return EXIT_FAIL
    return EXIT_OK


def cmd_paper(args, out):
    if args.theorem4:
        if args.window < 4:
            raise UsageError("--window must be at least 4")
        def1 = gallery.theorem4_def1_fails(args.window)
        def2 = gallery.theorem4_def2_holds(args.window)
        reports = [def1, def2]
        inputs = {"example": "theorem4", "window": args.window}
        summary = {"def1": def1.holds, "def2_window": def2.holds}
        reproduced = not def1.holds and def2.holds
        transcript = gallery.theorem4_transcript(args.window)
    else:
        def1, prop_a = gallery.remark6_check()
        reports = [def1, prop_a]
        inputs = {"example": "remark6"}
        summary = {"def1": def1.holds, "property_a": prop_a.holds}
        reproduced = def1.holds and not prop_a.holds
        transcript = gallery.remark6_transcript()
    results = [r.as_dict(str) for r in reports]
    _emit(out, args, inputs, results, transcript + [_report_line(r, str) for r in reports],
          {"summary": summary, "transcript": transcript})
    return EXIT_OK if reproduced else EXIT_FAIL


COMMANDS = {
    "validate": cmd_validate,
    "check": cmd_check,
    "compose": cmd_compose,
    "crisp": cmd_crisp,
    "search": cmd_search,
    "paper": cmd_paper,
}


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except DSLError as e:
        err.write(f"{getattr(args, 'file', '<input>')}:{e}\n")
        return EXIT_USAGE
    except (OSError, GradeError, BudgetError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
