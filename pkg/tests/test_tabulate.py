from pathlib import Path

import pytest
from pydantic import TypeAdapter, ValidationError

from cubicdisc.model.errors import DomainError, UsageError
from cubicdisc.model.models import TableRow
from cubicdisc.model.schemas import TableRowRecord
from cubicdisc.services.tabulate import table_service

GOLDEN = Path(__file__).parent / "data" / "table1_d200.csv"


def marks(rows):
    return {r.d: (r.mark_star_star, r.mark_star_star_star) for r in rows}


def test_generate_table_30():
    rows = table_service.generate_table(30)
    assert [r.d for r in rows] == [8, 12, 14, 18, 20, 24, 26, 30]
    assert {d for d, m in marks(rows).items() if any(m)} == {14, 26}
    assert marks(rows)[14] == marks(rows)[26] == (True, True)


def test_generate_table_100():
    m = marks(table_service.generate_table(100))
    assert m[74] == m[78] == m[98] == (True, False)
    assert m[86] == (True, True)


def test_generate_table_8():
    rows = table_service.generate_table(8)
    assert rows == [TableRow(d=8, mark_star_star=False, mark_star_star_star=False)]


def test_generate_table_rejects_small_max():
    with pytest.raises(DomainError):
        table_service.generate_table(7)


@pytest.mark.parametrize("d_max", [8, 50, 123, 200, 1000])
def test_row_count(d_max):
    expected = sum(1 for d in range(7, d_max + 1) if d % 6 in (0, 2))
    assert len(table_service.generate_table(d_max)) == expected


def test_golden_table():
    text = table_service.render(table_service.generate_table(200), "csv")
    assert text == GOLDEN.read_text(encoding="utf-8")
    assert text.count("\n") == 66


def test_golden_marks():
    rows = table_service.parse_csv(GOLDEN.read_text(encoding="utf-8"))
    m = marks(rows)
    assert {d for d, v in m.items() if v == (True, False)} == {74, 78, 98, 158}
    assert {d for d, v in m.items() if v == (True, True)} == {14, 26, 38, 42, 62, 86, 114, 122, 134, 146, 182, 186, 194}


def test_parallel_matches_serial():
    assert table_service.generate_table(300, workers=2) == table_service.generate_table(300)


@pytest.mark.parametrize(
    "row, line",
    [((14, True, True), "14,x,x"), ((74, True, False), "74,x,"), ((8, False, False), "8,,")],
)
def test_render_csv_row(row, line):
    d, ss, sss = row
    text = table_service.render([TableRow(d=d, mark_star_star=ss, mark_star_star_star=sss)], "csv")
    assert text == f"d,star_star,star_star_star\n{line}\n"


def test_render_sorts_rows():
    rows = table_service.generate_table(14)
    assert table_service.render(rows[::-1], "csv") == table_service.render(rows, "csv")


def test_render_json_round_trip():
    text = table_service.render(table_service.generate_table(50), "json")
    adapter = TypeAdapter(list[TableRowRecord])
    assert adapter.dump_json(adapter.validate_json(text), indent=2).decode() + "\n" == text


def test_render_latex():
    text = table_service.render(table_service.generate_table(14), "latex")
    lines = text.splitlines()
    assert lines[0] == r"\begin{tabular}{c|c|c}"
    assert r"14 & x & x \\" in lines
    assert lines[-1] == r"\end{tabular}"


def test_render_text():
    lines = table_service.render(table_service.generate_table(14), "text").splitlines()
    assert lines[0].split() == ["d", "(**)", "(***)"]
    assert lines[-1].split() == ["14", "x", "x"]
    assert lines[1].split() == ["8"]


def test_render_errors():
    rows = table_service.generate_table(8)
    with pytest.raises(UsageError):
        table_service.render(rows, "html")
    with pytest.raises(UsageError):
        table_service.render([], "csv")


def test_table_row_invariants():
    with pytest.raises(ValidationError):
        TableRow(d=10, mark_star_star=False, mark_star_star_star=False)
    with pytest.raises(ValidationError):
        TableRow(d=12, mark_star_star=False, mark_star_star_star=True)
