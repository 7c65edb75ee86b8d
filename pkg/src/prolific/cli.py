"""Command-line front end: ``prolific <subcommand> ...``.

Exit status: 0 success, 1 failed check, 2 usage or input error,
3 budget exhausted before an answer was reached.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .dot import write_dot
from .enumeration import MAX_N, connected_graphs
from .errors import BudgetExceeded, CapExceeded, ProlificError, UnknownCheck
from .families import generate, is_prolific, parse_descriptor
from .graph import Graph
from .graph6 import parse_graph6, read_graph6_lines, write_graph6
from .index import INDEX_BUDGET, family_index_scan, parameter_index
from .linegraph import Budget, iterate_line_graph
from .parameters import ParamKind, compute

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

CLASSES = {
    "all": lambda g: True,
    "delta>=3": lambda g: min(g.degrees) >= 3,
    "delta>=4": lambda g: min(g.degrees) >= 4,
    "delta=3": lambda g: min(g.degrees) == 3,
    "delta=2": lambda g: min(g.degrees) == 2,
    "delta<=2": lambda g: min(g.degrees) <= 2,
    "d>=3": lambda g: Fraction(2 * g.e, g.n) >= 3,
    "d>=4": lambda g: Fraction(2 * g.e, g.n) >= 4,
    "tree": lambda g: g.e == g.n - 1,
}


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return "-" if x is None else str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return _fmt(x)
    return x


def _table(header: Sequence[str], rows: Iterable[Sequence], out: TextIO) -> None:
    rows = [[_fmt(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _budget(args) -> Budget:
    try:
        return Budget(
            max_vertices=args.max_vertices,
            max_iterations=args.max_iterations,
            solver_node_cap=args.node_cap,
            solver_time_cap=args.time_cap,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_budget(p: argparse.ArgumentParser, iterations: int) -> None:
    g = p.add_argument_group("budget")
    g.add_argument("--max-vertices", type=int, default=50_000, help="largest iterate to materialize")
    g.add_argument("--max-iterations", type=int, default=iterations, help="deepest line-graph level")
    g.add_argument("--node-cap", type=int, default=5_000_000, help="search nodes per exact solve")
    g.add_argument("--time-cap", type=float, default=None, help="seconds per exact solve")


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", "-i", metavar="FILE", help="graph6 file (default: stdin)")
    src.add_argument("--family", "-f", metavar="DESC", action="append", help="family descriptor, e.g. claw:2,1,1 (repeatable)")
    src.add_argument("--graph6", "-g", metavar="CODE", action="append", help="graph6 string (repeatable)")


def _read_inputs(args, stdin: TextIO) -> list[Graph]:
    if args.family:
        return [generate(parse_descriptor(d)) for d in args.family]
    if args.graph6:
        return [parse_graph6(code, line=i + 1) for i, code in enumerate(args.graph6)]
    if args.input:
        try:
            with open(args.input) as fh:
                return list(read_graph6_lines(fh))
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return list(read_graph6_lines(stdin))


def _params(text: Sequence[str] | None, default_all: bool) -> list[ParamKind]:
    if not text:
        return list(ParamKind) if default_all else []
    out = []
    for chunk in text:
        for name in chunk.split(","):
            if name.strip():
                try:
                    out.append(ParamKind.parse(name.strip()))
                except ValueError as exc:
                    raise UsageError(str(exc)) from None
    return out


# ---------------------------------------------------------------------------
# subcommands


def cmd_iterate(args, out: TextIO, stdin: TextIO) -> int:
    budget = _budget(args)
    kinds = _params(args.param, default_all=False)
    status = EXIT_OK
    docs = []
    for gi, g in enumerate(_read_inputs(args, stdin)):
        trace = iterate_line_graph(g, args.k, budget, degree_only_last=not kinds and args.write is None)
        extra: dict[ParamKind, list] = {k: [] for k in kinds}
        for lv in trace.levels:
            for k in kinds:
                if lv.graph is None:
                    extra[k].append(None)
                    continue
                try:
                    extra[k].append(compute(lv.graph, k, budget))
                except BudgetExceeded:
                    extra[k].append(None)
                    status = EXIT_BUDGET
        if trace.truncated:
            status = EXIT_BUDGET
        rows = []
        for i, lv in enumerate(trace.levels):
            rows.append([lv.k, lv.n, lv.e, lv.max_degree, lv.min_degree, lv.avg_degree] + [extra[k][i] for k in kinds])
        header = ["k", "n", "e", "maxdeg", "mindeg", "avgdeg"] + [k.value for k in kinds]
        if args.format == "json":
            docs.append(
                {
                    "graph6": write_graph6(g),
                    "levels": [dict(zip(header, map(_jsonable, r))) for r in rows],
                    "truncated": trace.truncated,
                }
            )
        else:
            if gi:
                out.write("\n")
            out.write(f"# {write_graph6(g)}" + (f" (truncated: {trace.truncated})" if trace.truncated else "") + "\n")
            _table(header, rows, out)
        if args.write is not None:
            last = trace.levels[-1].graph
            if last is not None:
                with open(args.write, "a") as fh:
                    fh.write(write_graph6(last) + "\n")
    if args.format == "json":
        out.write(json.dumps(docs, sort_keys=True, indent=2) + "\n")
    return status


def cmd_params(args, out: TextIO, stdin: TextIO) -> int:
    budget = _budget(args)
    kinds = _params(args.param, default_all=True)
    status = EXIT_OK
    rows = []
    for g in _read_inputs(args, stdin):
        vals = []
        for k in kinds:
            try:
                vals.append(compute(g, k, budget))
            except BudgetExceeded:
                vals.append(None)
                status = EXIT_BUDGET
        rows.append((write_graph6(g), vals))
    if args.format == "json":
        doc = [{"graph6": code, "params": {k.value: _jsonable(v) for k, v in zip(kinds, vals)}} for code, vals in rows]
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        _table(["graph6"] + [k.value for k in kinds], [[c] + v for c, v in rows], out)
    return status


def cmd_index(args, out: TextIO, stdin: TextIO) -> int:
    budget = _budget(args)
    kind = _params([args.param], default_all=False)[0]
    status = EXIT_OK
    results = []
    for g in _read_inputs(args, stdin):
        res = parameter_index(g, kind, budget, verify=args.verify)
        if not res.found:
            status = EXIT_BUDGET
        if res.disagreements:
            status = EXIT_FAILED
        results.append((write_graph6(g), res))
    if args.format == "json":
        out.write(json.dumps([dict(r.as_dict(), graph6=c) for c, r in results], sort_keys=True, indent=2) + "\n")
    else:
        for code, res in results:
            out.write(f"{code}\t{res.describe()}\n")
    return status


def cmd_scan(args, out: TextIO, stdin: TextIO) -> int:
    budget = _budget(args)
    kind = _params([args.param], default_all=False)[0]
    pred = CLASSES[args.cls]
    graphs = []
    for n in range(max(4, args.min_n), args.n + 1):
        graphs.extend(g for g in connected_graphs(n) if is_prolific(g) and pred(g))
    uni = f"prolific graphs {max(4, args.min_n)} <= n <= {args.n}, class {args.cls}"
    res = family_index_scan(graphs, kind, budget, uni, args.workers)
    if args.format == "json":
        out.write(json.dumps(res.as_dict(), sort_keys=True, indent=2) + "\n")
    else:
        out.write(f"# {uni}: {res.count} graphs, parameter {kind.value}\n")
        out.write(f"max index: {_fmt(res.max_index)}\n")
        _table(["index", "count"], sorted(res.histogram.items()), out)
        if res.budget_exceeded:
            out.write(f"budget exceeded: {len(res.budget_exceeded)}\n")
        out.write("witnesses:\n")
        for w in res.witnesses:
            out.write(f"  {w}\n")
    return EXIT_BUDGET if res.budget_exceeded else EXIT_OK


def _emit_graphs(graphs: Iterable[Graph], fmt: str, out: TextIO, names: Sequence[str] | None = None) -> None:
    for i, g in enumerate(graphs):
        if fmt == "dot":
            out.write(write_dot(g, names[i] if names else f"G{i}"))
        elif fmt == "json":
            out.write(json.dumps({"graph6": write_graph6(g), "n": g.n, "edges": [list(e) for e in g.edges]}, sort_keys=True) + "\n")
        else:
            out.write(write_graph6(g) + "\n")


def cmd_generate(args, out: TextIO, stdin: TextIO) -> int:
    graphs = [generate(parse_descriptor(d)) for d in args.descriptor]
    try:
        _emit_graphs(graphs, args.format, out, args.descriptor)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_enumerate(args, out: TextIO, stdin: TextIO) -> int:
    try:
        graphs = connected_graphs(args.n, args.max_excess)
    except CapExceeded as exc:
        raise UsageError(f"{exc} (supported: 1 <= n <= {MAX_N})") from None
    if args.prolific:
        graphs = [g for g in graphs if is_prolific(g)]
    _emit_graphs(graphs, args.format, out)
    return EXIT_OK


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    from .harness import CheckConfig, list_checks, run_check, traceability_table

    if args.list:
        out.write(traceability_table() + "\n")
        return EXIT_OK
    if not args.check:
        raise UsageError("verify needs --check ID (or --list)")
    ids: list[str] = []
    for chunk in args.check:
        for cid in chunk.split(","):
            cid = cid.strip()
            if cid.lower() == "all":
                ids.extend(list_checks(include_optional=False))
            elif cid:
                ids.append(cid)
    cfg = CheckConfig(max_n=args.max_n, family_max_n=args.family_max_n, workers=args.workers)
    status = EXIT_OK
    docs = []
    for cid in ids:
        rep = run_check(cid, cfg)
        if not rep.passed:
            status = EXIT_FAILED
        if args.format == "json":
            docs.append(rep.as_dict(timing=args.timing))
        else:
            tail = f" ({rep.wall_time:.2f}s)" if args.timing else ""
            out.write(f"{rep.check_id}: {'PASS' if rep.passed else 'FAIL'} on {rep.graphs_tested} ({rep.universe}){tail}\n")
            for c in rep.clauses:
                out.write(f"  {'ok  ' if c.passed else 'FAIL'} {c.name}: {c.tested} tested, {len(set(c.counterexamples))} counterexamples\n")
                for code in sorted(set(c.counterexamples))[:5]:
                    out.write(f"       {code}\n")
    if args.format == "json":
        body = docs[0] if len(docs) == 1 else docs
        out.write(json.dumps(body, sort_keys=True, indent=2) + "\n")
    return status


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prolific", description="Iterated line graphs of prolific graphs: parameters, indices, checks.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("iterate", help="per-level n, e, Delta, delta, d of L^k(G)")
    _add_input(p)
    p.add_argument("-k", type=int, default=3, help="deepest level (default 3)")
    p.add_argument("--param", "-p", action="append", help="also compute these parameters exactly per level")
    p.add_argument("--write", metavar="FILE", help="append graph6 of the last level to FILE")
    p.add_argument("--format", choices=["table", "json"], default="table")
    _add_budget(p, 8)
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("params", help="compute parameters of each input graph")
    _add_input(p)
    p.add_argument("--param", "-p", action="append", help="parameter names (default: all fifteen)")
    p.add_argument("--format", choices=["table", "json"], default="table")
    _add_budget(p, 8)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("index", help="ind(P, G) for each input graph")
    _add_input(p)
    p.add_argument("--param", "-p", required=True)
    p.add_argument("--verify", action="store_true", help="recompute each level exactly and report mismatches")
    p.add_argument("--format", choices=["table", "json"], default="table")
    _add_budget(p, INDEX_BUDGET.max_iterations)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("scan", help="family scan of ind(P, G) over enumerated prolific graphs")
    p.add_argument("--param", "-p", required=True)
    p.add_argument("--n", type=int, required=True, help="largest vertex count")
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--class", dest="cls", choices=sorted(CLASSES), default="all")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["table", "json"], default="table")
    _add_budget(p, INDEX_BUDGET.max_iterations)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("generate", help="emit family members")
    p.add_argument("descriptor", nargs="+", help="e.g. claw:2,1,1 cp:3,3 dstar:3 star:4")
    p.add_argument("--format", choices=["graph6", "dot", "json"], default="graph6")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="emit all connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prolific", action="store_true", help="keep only prolific graphs")
    p.add_argument("--max-excess", type=int, default=None, help="keep graphs with e <= n + K")
    p.add_argument("--format", choices=["graph6", "dot", "json"], default="graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run registered checks and emit reports")
    p.add_argument("--check", "-c", action="append", help="check id(s), comma separated, or 'all'")
    p.add_argument("--list", action="store_true", help="print the check registry")
    p.add_argument("--max-n", type=int, default=None, help="override the corpus size of each check")
    p.add_argument("--family-max-n", type=int, default=13)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall time (reports are then not byte-stable)")
    p.add_argument("--format", choices=["table", "json"], default="json")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if getattr(args, "workers", 1) < 1:
        print("prolific: error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out, stdin)
    except UnknownCheck as exc:
        print(f"prolific: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"prolific: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"prolific: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ProlificError as exc:
        print(f"prolific: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
