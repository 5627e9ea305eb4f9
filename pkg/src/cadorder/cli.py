"""Command-line front end.

Subcommands: analyze, orderings, project, roots, bench.  Exit codes: 0 on
success, 1 for usage errors, 2 for parse errors, 3 for data-consistency
errors in the cell-count table.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .heuristics import HEURISTICS, choose, enumerate_orderings, ndrr_value, sotd_value
from .parsing import ParseError, parse_system, render
from .poly import PolySystem
from .projection import format_ordering, full_projection, parse_ordering
from .stats import CellTableError, compute_report, emit_report, load_cell_table
from .univariate import count_distinct_real_roots, to_univariate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DATA = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def _read_system(path: str) -> PolySystem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 1, 1)
    return parse_system(text)


def _ordering_names(ordering) -> tuple[str, ...]:
    return tuple(v.name for v in ordering)


def _cmd_analyze(args, out) -> int:
    system = _read_system(args.file)
    names = HEURISTICS if args.heuristic == "all" else (args.heuristic,)
    reports = [choose(system, h) for h in names]
    if args.format == "json":
        payload = {
            "heuristics": [
                {
                    "heuristic": r.heuristic,
                    "per_ordering": (
                        None
                        if r.per_ordering is None
                        else {
                            format_ordering(o): v
                            for o, v in sorted(
                                r.per_ordering.items(),
                                key=lambda it: _ordering_names(it[0]),
                            )
                        }
                    ),
                    "candidates": [format_ordering(c) for c in r.candidates],
                    "chosen": format_ordering(r.chosen),
                }
                for r in reports
            ]
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for r in reports:
            out.write(f"heuristic {r.heuristic}\n")
            if r.per_ordering is not None:
                out.write("  per-ordering:\n")
                for o in sorted(r.per_ordering, key=_ordering_names):
                    out.write(f"    {format_ordering(o)}: {r.per_ordering[o]}\n")
            out.write("  candidates: " + ", ".join(format_ordering(c) for c in r.candidates) + "\n")
            out.write(f"  chosen: {format_ordering(r.chosen)}\n")
    return EXIT_OK


def _cmd_orderings(args, out) -> int:
    system = _read_system(args.file)
    orderings = enumerate_orderings(system.variables)
    rows = []
    for o in orderings:
        ps = full_projection(system, o)
        rows.append((format_ordering(o), sotd_value(ps), ndrr_value(ps)))
    width = max(len(r[0]) for r in rows)
    out.write(f"{'ordering':<{width}}  {'sotd':>6}  {'ndrr':>6}\n")
    for name, sotd, ndrr in rows:
        out.write(f"{name:<{width}}  {sotd:>6}  {ndrr:>6}\n")
    return EXIT_OK


def _cmd_project(args, out) -> int:
    system = _read_system(args.file)
    try:
        ordering = parse_ordering(args.order)
        ps = full_projection(system, ordering)
    except ValueError as exc:
        raise _UsageError(str(exc))
    n = len(ps.levels)
    for i, level in enumerate(ps.levels):
        out.write(f"level {n - i}:\n")
        for p in level:
            out.write(render(p) + "\n")
    return EXIT_OK


def _cmd_roots(args, out) -> int:
    system = _read_system(args.file)
    counts = []
    for p in system.polynomials:
        vs = p.variables()
        if len(vs) > 1:
            raise ParseError(
                f"polynomial is not univariate: {render(p)}", 1, 1
            )
        v = next(iter(vs)) if vs else system.variables[0] if system.variables else None
        if v is None:
            counts.append(0)
        else:
            counts.append(count_distinct_real_roots(to_univariate(p, v)))
    for c in counts:
        out.write(f"{c}\n")
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    problems_dir = Path(args.problems)
    if not problems_dir.is_dir():
        raise _UsageError(f"not a directory: {args.problems}")
    poly_files = sorted(problems_dir.glob("*.poly"))
    if not poly_files:
        raise _UsageError(f"no .poly files in {args.problems}")
    picks: dict[str, dict[str, tuple[str, ...]]] = {h: {} for h in HEURISTICS}
    for path in poly_files:
        system = parse_system(path.read_text(encoding="utf-8"))
        for h in HEURISTICS:
            picks[h][path.stem] = _ordering_names(choose(system, h).chosen)
    try:
        csv_bytes = Path(args.cells).read_bytes()
    except OSError as exc:
        raise CellTableError(f"cannot read {args.cells}: {exc.strerror}")
    table = load_cell_table(csv_bytes)
    report = compute_report(table, picks)
    out.write(emit_report(report, args.format).decode("utf-8"))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="cadorder", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run ordering heuristics on a .poly file")
    p.add_argument("file")
    p.add_argument("--heuristic", choices=list(HEURISTICS) + ["all"], default="all")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("orderings", help="list all orderings with sotd and ndrr values")
    p.add_argument("file")
    p.set_defaults(func=_cmd_orderings)

    p = sub.add_parser("project", help="dump the full projection set for one ordering")
    p.add_argument("file")
    p.add_argument("--order", required=True, metavar="v1>v2>...>vn")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("roots", help="count distinct real roots of univariate inputs")
    p.add_argument("file")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("bench", help="benchmark heuristics against a cell-count CSV")
    p.add_argument("--problems", required=True, metavar="DIR")
    p.add_argument("--cells", required=True, metavar="CSV")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        err.write(f"cadorder: usage error: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"cadorder: parse error: {exc}\n")
        return EXIT_PARSE
    except CellTableError as exc:
        err.write(f"cadorder: cell table error: {exc}\n")
        return EXIT_DATA
    except ValueError as exc:
        err.write(f"cadorder: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
