"""Benchmark statistics over externally supplied per-ordering cell counts.

The cell counts themselves come from an external CAD implementation and are
ingested as CSV.  This module reproduces the comparison methodology: how often
each heuristic picks the most competitive ordering, the percentage cell-count
saving of each pick relative to the per-problem average over all orderings
(on problems where nothing timed out), and how often a pick avoids a timeout
(on problems where some ordering timed out).

Orderings are handled as tuples of variable-name strings here; the CSV wire
format joins them with '>' in reverse-projection order (``x>y>z``).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import floor
from typing import Mapping, Sequence

CSV_HEADER = ["problem", "ordering", "cells", "timeout"]

Ordering = tuple[str, ...]
Picks = Mapping[str, Ordering]  # problem_id -> ordering


class CellTableError(ValueError):
    """Cell-count table fails validation or a pick does not join against it."""


@dataclass(frozen=True)
class CellCountRow:
    problem_id: str
    ordering: Ordering
    cells: int | None  # None iff timeout
    timeout: bool


@dataclass(frozen=True)
class CellCountTable:
    rows: tuple[CellCountRow, ...]

    def problems(self) -> list[str]:
        return sorted({r.problem_id for r in self.rows})

    def rows_for(self, problem_id: str) -> list[CellCountRow]:
        return [r for r in self.rows if r.problem_id == problem_id]

    def lookup(self, problem_id: str, ordering: Ordering) -> CellCountRow:
        for r in self.rows:
            if r.problem_id == problem_id and r.ordering == ordering:
                return r
        raise CellTableError(
            f"no cell-count row for problem {problem_id!r}, "
            f"ordering {'>'.join(ordering)}"
        )

    def has_timeout(self, problem_id: str) -> bool:
        return any(r.timeout for r in self.rows_for(problem_id))


def load_cell_table(data: bytes | str) -> CellCountTable:
    """Parse and validate the cell-count CSV.

    Requires the exact header ``problem,ordering,cells,timeout``; per problem,
    every permutation of its variable set must appear exactly once, and a
    cell count is present exactly when timeout is 0.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    reader = csv.reader(io.StringIO(data))
    try:
        header = next(reader)
    except StopIteration:
        raise CellTableError("missing header")
    if header != CSV_HEADER:
        raise CellTableError(
            f"bad header {','.join(header)!r}; expected {','.join(CSV_HEADER)!r}"
        )
    rows: list[CellCountRow] = []
    seen: set[tuple[str, Ordering]] = set()
    for lineno, record in enumerate(reader, start=2):
        if not record:
            continue
        if len(record) != 4:
            raise CellTableError(f"line {lineno}: expected 4 fields")
        problem, ordering_text, cells_text, timeout_text = record
        ordering = tuple(ordering_text.split(">"))
        if not problem or any(not name for name in ordering):
            raise CellTableError(f"line {lineno}: empty problem or ordering field")
        if timeout_text not in ("0", "1"):
            raise CellTableError(f"line {lineno}: timeout must be 0 or 1")
        timeout = timeout_text == "1"
        if timeout:
            if cells_text != "":
                raise CellTableError(
                    f"line {lineno}: cell count present on a timed-out row"
                )
            cells = None
        else:
            if not cells_text.isdigit() or int(cells_text) <= 0:
                raise CellTableError(
                    f"line {lineno}: cells must be a positive integer"
                )
            cells = int(cells_text)
        key = (problem, ordering)
        if key in seen:
            raise CellTableError(
                f"line {lineno}: duplicate row for problem {problem!r}, "
                f"ordering {ordering_text!r}"
            )
        seen.add(key)
        rows.append(CellCountRow(problem, ordering, cells, timeout))

    by_problem: dict[str, list[CellCountRow]] = {}
    for r in rows:
        by_problem.setdefault(r.problem_id, []).append(r)
    for problem, prows in by_problem.items():
        variables = sorted(prows[0].ordering)
        expected = {tuple(p) for p in permutations(variables)}
        got = {r.ordering for r in prows}
        if got != expected:
            raise CellTableError(f"incomplete orderings for problem {problem!r}")
    return CellCountTable(tuple(rows))


def best_pick_counts(
    table: CellCountTable, picks: Mapping[str, Picks]
) -> dict[str, int]:
    """How often each heuristic's pick is the most competitive of them all.

    Only problems where every heuristic's pick finished are compared; ties
    credit every tying heuristic, so counts may sum to more than the number
    of problems.
    """
    heuristics = sorted(picks)
    problems = sorted(set.intersection(*(set(picks[h]) for h in heuristics)))
    counts = {h: 0 for h in heuristics}
    for problem in problems:
        cells = {}
        complete = True
        for h in heuristics:
            row = table.lookup(problem, picks[h][problem])
            if row.timeout:
                complete = False
                break
            cells[h] = row.cells
        if not complete:
            continue
        best = min(cells.values())
        for h in heuristics:
            if cells[h] == best:
                counts[h] += 1
    return counts


def savings_percent(table: CellCountTable, pick: Picks) -> dict[str, Fraction]:
    """Per-problem saving of the pick against the all-orderings average.

    Only problems where no ordering timed out are evaluated.  Positive means
    the pick beat the average.
    """
    out: dict[str, Fraction] = {}
    for problem in sorted(pick):
        prows = table.rows_for(problem)
        if not prows:
            raise CellTableError(f"unknown problem {problem!r}")
        if any(r.timeout for r in prows):
            continue
        row = table.lookup(problem, pick[problem])
        if row.cells is None:
            raise CellTableError(f"pick timed out on problem {problem!r}")
        avg = Fraction(sum(r.cells for r in prows), len(prows))
        out[problem] = (avg - row.cells) / avg * 100
    return out


@dataclass(frozen=True)
class SavingsSummary:
    mean_pct: Fraction
    median_pct: Fraction
    q1_pct: Fraction
    q3_pct: Fraction
    n_problems: int


def _quantile(sorted_values: Sequence[Fraction], q: Fraction) -> Fraction:
    """Linear interpolation at position (n-1)*q of the sorted sample."""
    pos = (len(sorted_values) - 1) * q
    lo = floor(pos)
    frac = pos - lo
    if frac == 0:
        return Fraction(sorted_values[lo])
    return sorted_values[lo] + (sorted_values[lo + 1] - sorted_values[lo]) * frac


def summarize(values: Sequence[Fraction]) -> SavingsSummary:
    """Exact mean, median and quartiles of a nonempty sample."""
    if not values:
        raise ValueError("empty input")
    ordered = sorted(Fraction(v) for v in values)
    mean = sum(ordered, Fraction(0)) / len(ordered)
    return SavingsSummary(
        mean_pct=mean,
        median_pct=_quantile(ordered, Fraction(1, 2)),
        q1_pct=_quantile(ordered, Fraction(1, 4)),
        q3_pct=_quantile(ordered, Fraction(3, 4)),
        n_problems=len(ordered),
    )


def timeout_avoidance(table: CellCountTable, pick: Picks) -> int:
    """Among problems where some ordering timed out, how many picks finished."""
    count = 0
    for problem in sorted(pick):
        prows = table.rows_for(problem)
        if not any(r.timeout for r in prows):
            continue
        if not table.lookup(problem, pick[problem]).timeout:
            count += 1
    return count


# -- report assembly ---------------------------------------------------------


@dataclass(frozen=True)
class HeuristicStats:
    best_pick_count: int
    best_pick_pct: Fraction
    savings: SavingsSummary | None  # None when no problem is timeout-free
    timeout_avoidance_count: int


@dataclass(frozen=True)
class BenchReport:
    per_heuristic: dict[str, HeuristicStats]
    n_problems: int
    n_no_timeout: int
    n_some_timeout: int


def _heuristic_order(names) -> list[str]:
    canonical = ["brown", "sotd", "ndrr"]
    return [h for h in canonical if h in names] + sorted(
        h for h in names if h not in canonical
    )


def compute_report(table: CellCountTable, picks: Mapping[str, Picks]) -> BenchReport:
    """Join heuristic picks against the cell table and compute all statistics."""
    heuristics = _heuristic_order(picks)
    problems = sorted(set.intersection(*(set(picks[h]) for h in heuristics)))
    if not problems:
        raise CellTableError("no problems to report on")
    for h in heuristics:
        for problem in problems:
            table.lookup(problem, picks[h][problem])  # validates the join
    n_some_timeout = sum(1 for p in problems if table.has_timeout(p))
    n_no_timeout = len(problems) - n_some_timeout
    best = best_pick_counts(table, picks)
    per: dict[str, HeuristicStats] = {}
    for h in heuristics:
        pick = {p: picks[h][p] for p in problems}
        savings = savings_percent(table, pick)
        per[h] = HeuristicStats(
            best_pick_count=best[h],
            best_pick_pct=Fraction(best[h] * 100, len(problems)),
            savings=summarize(list(savings.values())) if savings else None,
            timeout_avoidance_count=timeout_avoidance(table, pick),
        )
    return BenchReport(per, len(problems), n_no_timeout, n_some_timeout)


def _pct(x: Fraction | None) -> str:
    return "n/a" if x is None else f"{float(x):.2f}%"


def emit_report(report: BenchReport, format: str = "text") -> bytes:
    """Serialize a report as aligned text, JSON, or one CSV row per heuristic."""
    heuristics = _heuristic_order(report.per_heuristic)
    if format == "text":
        lines = [
            f"problems: {report.n_problems} "
            f"(no timeout: {report.n_no_timeout}, "
            f"some timeout: {report.n_some_timeout})",
            "",
        ]
        width = max(len(h) for h in heuristics) + 2
        header = " " * 24 + "".join(f"{h:>{max(width, 10)}}" for h in heuristics)

        def table_row(label: str, cells: list[str]) -> str:
            return f"{label:<24}" + "".join(f"{c:>{max(width, 10)}}" for c in cells)

        lines.append("best pick")
        lines.append(header)
        lines.append(table_row("  count", [str(report.per_heuristic[h].best_pick_count) for h in heuristics]))
        lines.append(table_row("  percent", [_pct(report.per_heuristic[h].best_pick_pct) for h in heuristics]))
        lines.append("")
        lines.append(f"cell count saving vs average (over {report.n_no_timeout} timeout-free problems)")
        lines.append(header)
        for label, field in (
            ("  mean", "mean_pct"),
            ("  median", "median_pct"),
            ("  q1", "q1_pct"),
            ("  q3", "q3_pct"),
        ):
            cells = []
            for h in heuristics:
                s = report.per_heuristic[h].savings
                cells.append(_pct(getattr(s, field)) if s else "n/a")
            lines.append(table_row(label, cells))
        lines.append("")
        lines.append(f"timeout avoidance (over {report.n_some_timeout} problems with a timeout)")
        lines.append(header)
        lines.append(table_row("  count", [str(report.per_heuristic[h].timeout_avoidance_count) for h in heuristics]))
        return ("\n".join(lines) + "\n").encode("utf-8")

    if format == "json":
        payload = {
            "per_heuristic": {
                h: {
                    "best_pick_count": st.best_pick_count,
                    "best_pick_pct": float(st.best_pick_pct),
                    "mean_saving_pct": float(st.savings.mean_pct) if st.savings else None,
                    "median_saving_pct": float(st.savings.median_pct) if st.savings else None,
                    "q1_pct": float(st.savings.q1_pct) if st.savings else None,
                    "q3_pct": float(st.savings.q3_pct) if st.savings else None,
                    "timeout_avoidance_count": st.timeout_avoidance_count,
                }
                for h, st in report.per_heuristic.items()
            },
            "totals": {
                "n_problems": report.n_problems,
                "n_no_timeout": report.n_no_timeout,
                "n_some_timeout": report.n_some_timeout,
            },
        }
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")

    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([
            "heuristic", "best_pick_count", "best_pick_pct",
            "mean_saving_pct", "median_saving_pct", "q1_pct", "q3_pct",
            "timeout_avoidance_count",
        ])
        for h in heuristics:
            st = report.per_heuristic[h]
            s = st.savings
            writer.writerow([
                h,
                st.best_pick_count,
                f"{float(st.best_pick_pct):.6f}",
                f"{float(s.mean_pct):.6f}" if s else "",
                f"{float(s.median_pct):.6f}" if s else "",
                f"{float(s.q1_pct):.6f}" if s else "",
                f"{float(s.q3_pct):.6f}" if s else "",
                st.timeout_avoidance_count,
            ])
        return buf.getvalue().encode("utf-8")

    raise ValueError(f"unknown report format {format!r}")
