from __future__ import annotations

import argparse
import sys
from pathlib import Path

THIS_FILE = Path(__file__).resolve()
PROJECT_ROOT = THIS_FILE.parents[2]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from cubicdisc.services.tabulate import table_service

DEFAULT_OUT = PROJECT_ROOT / "tests" / "data" / "table1_d200.csv"


def write_golden(d_max: int, out: Path, check: bool) -> int:
    text = table_service.render(table_service.generate_table(d_max), "csv")
    if check:
        current = out.read_text(encoding="utf-8") if out.exists() else ""
        if current != text:
            print(f"{out} is out of date", file=sys.stderr)
            return 1
        print(f"{out} is up to date")
        return 0
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    print(f"wrote {text.count(chr(10)) - 1} rows to {out}")
    return 0


def main() -> None:
    parser = argparse.ArgumentParser(description="Regenerate the golden CSV of the comparison table.")
    parser.add_argument("--max", type=int, default=200, dest="d_max")
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    parser.add_argument("--check", action="store_true", help="compare instead of writing; exit 1 on difference")
    args = parser.parse_args()
    raise SystemExit(write_golden(args.d_max, args.out, args.check))


if __name__ == "__main__":
    main()
