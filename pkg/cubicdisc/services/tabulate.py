from __future__ import annotations

import csv
import io
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence

from pydantic import TypeAdapter

from cubicdisc.model.errors import DomainError, UsageError
from cubicdisc.model.models import TableRow
from cubicdisc.model.schemas import TableRowRecord
from cubicdisc.services import conditions

logger = logging.getLogger(__name__)

FORMATS = ("text", "csv", "json", "latex")
CSV_HEADER = ("d", "star_star", "star_star_star")
MARK = "x"

_records = TypeAdapter(List[TableRowRecord])


def table_row(d: int) -> TableRow:
    report = conditions.full_report(d)
    return TableRow(d=d, mark_star_star=report.star_star, mark_star_star_star=report.star_star_star)


def to_table_row_record(row: TableRow) -> TableRowRecord:
    return TableRowRecord(d=row.d, star_star=row.mark_star_star, star_star_star=row.mark_star_star_star)


def _mark(flag: bool) -> str:
    return MARK if flag else ""


class TableService:
    """Rows of the comparison table of (*), (**) and (***)."""

    @staticmethod
    def discriminants(d_max: int) -> list[int]:
        return [d for d in range(7, d_max + 1) if conditions.check_star(d)]

    def generate_table(self, d_max: int, workers: int = 1) -> List[TableRow]:
        if d_max < 8:
            raise DomainError(f"d_max must be at least 8, got {d_max}")
        if workers < 1:
            raise DomainError(f"workers must be positive, got {workers}")

        t0 = time.perf_counter()
        ds = self.discriminants(d_max)
        if workers == 1:
            rows = [table_row(d) for d in ds]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(table_row, ds, chunksize=max(1, len(ds) // (4 * workers))))
        elapsed_ms = int((time.perf_counter() - t0) * 1000)
        logger.info("table up to %d: %d rows in %d ms (workers=%d)", d_max, len(rows), elapsed_ms, workers)
        return rows

    @staticmethod
    def _text(rows: Sequence[TableRow]) -> str:
        width = max(len(str(rows[-1].d)), 3)
        lines = [f"{'d':>{width}}  {'(**)':^6}  {'(***)':^6}".rstrip()]
        for r in rows:
            lines.append(f"{r.d:>{width}}  {_mark(r.mark_star_star):^6}  {_mark(r.mark_star_star_star):^6}".rstrip())
        return "\n".join(lines) + "\n"

    @staticmethod
    def _csv(rows: Sequence[TableRow]) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow((r.d, _mark(r.mark_star_star), _mark(r.mark_star_star_star)))
        return buf.getvalue()

    @staticmethod
    def _json(rows: Sequence[TableRow]) -> str:
        return _records.dump_json([to_table_row_record(r) for r in rows], indent=2).decode() + "\n"

    @staticmethod
    def _latex(rows: Sequence[TableRow]) -> str:
        lines = [r"\begin{tabular}{c|c|c}", r"$d$ & (**) & (***) \\", r"\hline"]
        for r in rows:
            lines.append(f"{r.d} & {_mark(r.mark_star_star)} & {_mark(r.mark_star_star_star)} \\\\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"

    def render(self, rows: Sequence[TableRow], fmt: str = "text") -> str:
        if fmt not in FORMATS:
            raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
        if not rows:
            raise UsageError("nothing to render")
        rows = sorted(rows, key=lambda r: r.d)
        return getattr(self, f"_{fmt}")(rows)

    @staticmethod
    def parse_csv(text: str) -> List[TableRow]:
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if tuple(header or ()) != CSV_HEADER:
            raise UsageError(f"unexpected table header {header}")
        return [
            TableRow(d=int(d), mark_star_star=ss == MARK, mark_star_star_star=sss == MARK)
            for d, ss, sss in reader
        ]


table_service = TableService()
