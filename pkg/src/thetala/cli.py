"""Command-line interface.

Exit codes: 0 success, 2 usage or precondition error, 3 the labeling does
not verify, 4 solver budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import data
from .analysis import chi_la_theta, conjecture_sweep
from .constructions import (
    Labeled, label_cycle_union_A, label_cycle_union_B, label_paired_paths, label_theta_2s4,
    label_theta_4m, label_theta_4m3, label_theta_4m3_five, lift_two_coloring, merge_cycle_union,
    merge_spider_pendants,
)
from .errors import BudgetExceeded, NotFound, ParseError, SpecError, StructureViolation, ThetaLAError
from .graphs import SpiderSpec, ThetaSpec, build_spider, build_theta
from .labeling import EdgeLabeling, parse, parse_labeling, serialize_labeling, to_dot, verify
from .solver import SearchBudget, default_max_edges, exact_chi_la, find_spider_labeling

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 2, 3, 4

FAMILIES = ("theta-2s4", "paired", "size-4m3", "size-4m", "lift", "cycle-A", "cycle-B",
            "merge-cycles", "spider-merge")


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs " + ", ".join("--" + n for n in missing))


def _read_labeling(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return parse_labeling(text)


def _boundary_note(args) -> str | None:
    """Explanation for parameter choices that are known not to verify."""
    if args.family == "size-4m3" and args.k == 1:
        return "boundary case k = 1: the middle path is a single u-v edge and u, v share a color"
    if args.family == "size-4m3" and args.l is not None and args.l == args.m - 1:
        return "boundary case l = m-1: a single u-v edge joins two vertices of equal color"
    if args.family == "paired" and 1 in args.lengths:
        return "boundary case m_i = 1: two parallel u-v edges, so the graph is not simple"
    return None


def build_family(args) -> Labeled:
    fam = args.family
    if fam == "theta-2s4":
        _need(args, "s")
        return label_theta_2s4(args.s)
    if fam == "paired":
        _need(args, "lengths")
        return label_paired_paths(args.lengths, allow_degenerate=True)
    if fam == "size-4m3":
        _need(args, "m", "k")
        if args.l is not None:
            return label_theta_4m3_five(args.m, args.k, args.l)
        return label_theta_4m3(args.m, args.k)
    if fam == "size-4m":
        _need(args, "m", "xbreaks", "ybreaks")
        return label_theta_4m(args.m, args.xbreaks, args.ybreaks)
    if fam == "lift":
        _need(args, "l")
        if args.base:
            g, f = _read_labeling(args.base)
        elif args.l == 2:
            g = build_theta(data.LIFT_BASE_L2_LENGTHS)
            f = EdgeLabeling.from_rows(g, data.LIFT_BASE_L2_ROWS)
        else:
            raise UsageError("only l = 2 has a built-in base labeling; pass --base FILE")
        return lift_two_coloring(args.l, g, f)
    if fam == "cycle-A":
        _need(args, "r")
        return label_cycle_union_A(args.r)
    if fam == "cycle-B":
        _need(args, "r")
        return label_cycle_union_B(args.r)
    if fam == "merge-cycles":
        _need(args, "r", "kind", "distances")
        base = label_cycle_union_A(args.r) if args.kind == "A" else label_cycle_union_B(args.r)
        return merge_cycle_union(base, args.distances)
    if fam == "spider-merge":
        if args.base:
            g, f = _read_labeling(args.base)
        else:
            _need(args, "legs")
            spec = SpiderSpec(tuple(args.legs))
            budget = SearchBudget(max_edges=args.max_edges or default_max_edges())
            g, f = build_spider(spec), find_spider_labeling(spec, budget)
        return merge_spider_pendants(g, f)
    raise UsageError(f"unknown family {fam!r}")


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def cmd_construct(args) -> int:
    labeled = build_family(args)
    g = labeled.graph
    report = labeled.verify()
    if g.family in ("theta", "cycles"):
        kind = "theta" if g.family == "theta" else "cycles"
        print(f"graph: {kind}({','.join(map(str, g.params))})")
        print(f"sorted: {kind}({','.join(map(str, sorted(g.params)))})")
    else:
        print(f"graph: {g.n} vertices, {g.q} edges (not simple)")
    print(report.summary())
    if labeled.expected is not None:
        match = "matches" if report.color_set == labeled.expected else "DIFFERS from"
        print(f"{match} predicted colors " + " ".join(map(str, sorted(labeled.expected))))
    _write(args.output, serialize_labeling(g, labeled.labeling))
    if not report.is_local_antimagic:
        note = _boundary_note(args)
        if note:
            print(f"note: {note}")
        return EXIT_INVALID
    return EXIT_OK


def cmd_verify(args) -> int:
    g, f = _read_labeling(args.file)
    report = verify(g, f)
    print(report.summary())
    return EXIT_OK if report.is_local_antimagic else EXIT_INVALID


def cmd_classify(args) -> int:
    budget = SearchBudget(max_edges=args.max_edges or default_max_edges())
    res = chi_la_theta(ThetaSpec(tuple(args.theta)), budget, use_solver=not args.no_solver, jobs=args.jobs)
    print(res.describe())
    if res.family is not None:
        print(str(res.family))
    print(f"lower bound: {res.certificate}")
    if res.witness is not None:
        print(f"witness colors: {' '.join(map(str, res.witness.verify().sorted_colors()))}")
        _write(args.output, serialize_labeling(res.witness.graph, res.witness.labeling))
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.file:
        try:
            g, _ = parse(Path(args.file).read_text())
        except OSError as exc:
            raise UsageError(str(exc)) from None
    elif args.theta:
        g = build_theta(args.theta)
    else:
        raise UsageError("solve needs --theta or --file")
    budget = SearchBudget(max_edges=args.max_edges or default_max_edges(), time_cap=args.time_cap)
    res = exact_chi_la(g, budget, jobs=args.jobs)
    if res.chi_la is None:
        print("no local antimagic labeling exists")
        return EXIT_INVALID
    print(f"chi_la = {res.chi_la}")
    print(verify(g, res.witness).summary())
    _write(args.output, serialize_labeling(g, res.witness))
    return EXIT_OK


def cmd_sweep(args) -> int:
    budget = SearchBudget(max_edges=args.max_edges or default_max_edges())
    report = conjecture_sweep(args.max_q, budget, jobs=args.jobs)
    print(report.render())
    return EXIT_OK


def cmd_export(args) -> int:
    g, f = _read_labeling(args.dot)
    text = to_dot(g, f)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import render, run_all

    results = run_all()
    print(render(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thetala", description="Local antimagic labelings of theta graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a labeling from one of the explicit constructions")
    c.add_argument("--family", required=True, choices=FAMILIES)
    c.add_argument("--s", type=int)
    c.add_argument("--lengths", type=int_list)
    c.add_argument("--m", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--xbreaks", type=int_list)
    c.add_argument("--ybreaks", type=int_list)
    c.add_argument("--r", type=int)
    c.add_argument("--kind", choices=("A", "B"))
    c.add_argument("--distances", type=int_list)
    c.add_argument("--legs", type=int_list)
    c.add_argument("--base", help="labeling file used as input (lift, spider-merge)")
    c.add_argument("--max-edges", type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a labeling file")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="chi_la of a theta graph: family, construction or bounds")
    k.add_argument("--theta", type=int_list, required=True)
    k.add_argument("--no-solver", action="store_true")
    k.add_argument("--max-edges", type=int)
    k.add_argument("--jobs", type=int, default=1)
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="exact chi_la by search (small graphs)")
    s.add_argument("--theta", type=int_list)
    s.add_argument("--file", help="graph file (labels, if any, are ignored)")
    s.add_argument("--max-edges", type=int)
    s.add_argument("--time-cap", type=float)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    w = sub.add_parser("sweep", help="exact chi_la of all equal-parts bipartite theta graphs")
    w.add_argument("--max-q", type=int, required=True)
    w.add_argument("--max-edges", type=int)
    w.add_argument("--jobs", type=int, default=1)
    w.set_defaults(func=cmd_sweep)

    e = sub.add_parser("export", help="write a labeling as Graphviz DOT")
    e.add_argument("--dot", required=True, metavar="FILE", help="labeling file to export")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)

    t = sub.add_parser("selftest", help="re-derive the published fixtures")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ParseError as exc:
        print(f"{getattr(args, 'file', None) or getattr(args, 'dot', '') or 'input'}:{exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StructureViolation, NotFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, SpecError, ThetaLAError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
