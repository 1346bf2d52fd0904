"""One serialization layer for every command: text, JSON and CSV.

Records are flat dicts. Fractions are written as "p/q" strings everywhere so
that no format ever rounds an exact value.
"""
import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

Record = Dict[str, Any]


def plain(value: Any) -> Any:
    """Turn a value into something JSON and CSV can hold without losing precision."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or isinstance(value, (int, str)) or value is None:
        return value
    return str(value)


def format_records(
    records: Sequence[Record],
    fmt: str,
    text_columns: Optional[List[str]] = None,
) -> str:
    """Render records in the given format.

    Args:
        records: The rows to print, all with the same keys.

        fmt: One of "text", "json" or "csv".

        text_columns: Columns to show in text mode. A single column is printed as
            bare values, one per line; several are laid out as an aligned table.
            Defaults to every column.
    """
    rows = [{key: plain(value) for key, value in record.items()} for record in records]
    if fmt == "json":
        return json.dumps(rows, indent=2)

    columns = list(rows[0].keys()) if rows else []
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")

    columns = text_columns or columns
    if len(columns) == 1:
        return "\n".join(_cell(row[columns[0]]) for row in rows)
    return format_table(rows, columns)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def format_table(rows: Sequence[Record], columns: List[str]) -> str:
    """Left-aligned columns separated by two spaces, headed by the column names."""
    cells = [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [
        max([len(column)] + [len(line[i]) for line in cells])
        for i, column in enumerate(columns)
    ]
    lines = ["  ".join(column.ljust(width) for column, width in zip(columns, widths))]
    for line in cells:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)))
    return "\n".join(line.rstrip() for line in lines)
