"""File-backed result store: CSV with a fixed header, or a JSON array of row objects.

Floats are written with 17 significant digits, which round-trips every
double exactly, so rewriting a parsed file reproduces it byte for byte.
"""

import csv
import io
import json
import math
import re
from pathlib import Path
from typing import Any

from wireup import injectable

from mimo_trt.core.interfaces.result_store import ResultStore
from mimo_trt.entities.errors import ResultParseError
from mimo_trt.entities.result import (
    ARQ_COLUMNS,
    RESULT_COLUMNS,
    ArqColumns,
    ResultFormat,
    ResultRow,
)

_INT_COLUMNS = {"m", "n", "samples", "hits"}
_BOOL_COLUMNS = {"flagged"}
_TEXT_COLUMNS = {"scheme", "region"}
_PROBABILITY_COLUMNS = {"p_outage", "ci_lo", "ci_hi", "p_err"}
_NON_NEGATIVE_COLUMNS = {"samples", "hits", "eta", "mean_rounds"}
_WHITESPACE = re.compile(r"[ \t\n\r]*")


def format_float(value: float) -> str:
    return format(value, ".17g")


def _columns(rows: list[ResultRow]) -> tuple[str, ...]:
    if any(row.arq is not None for row in rows):
        return RESULT_COLUMNS + ARQ_COLUMNS
    return RESULT_COLUMNS


def _row_values(row: ResultRow, columns: tuple[str, ...]) -> dict[str, Any]:
    values: dict[str, Any] = {column: getattr(row, column) for column in RESULT_COLUMNS}
    if len(columns) > len(RESULT_COLUMNS):
        if row.arq is None:
            raise ValueError(f"row {row} lacks ARQ columns required by the table")
        values.update(eta=row.arq.eta, p_err=row.arq.p_err, mean_rounds=row.arq.mean_rounds)
    return values


def _cell_text(column: str, value: Any) -> str:
    if column in _BOOL_COLUMNS:
        return "true" if value else "false"
    if column in _INT_COLUMNS or column in _TEXT_COLUMNS:
        return str(value)
    return format_float(value)


def _convert(column: str, text: str) -> Any:
    if column in _BOOL_COLUMNS:
        if text not in ("true", "false"):
            raise ValueError(f"{column} must be true or false, got {text!r}")
        return text == "true"
    if column in _INT_COLUMNS:
        return _checked_number(column, int(text))
    if column in _TEXT_COLUMNS:
        if not text:
            raise ValueError(f"{column} must not be empty")
        return text
    return _checked_number(column, float(text))


def _checked_number(column: str, value: Any) -> Any:
    if not math.isfinite(value):
        raise ValueError(f"{column} must be finite, got {value}")
    if column in _PROBABILITY_COLUMNS and not 0.0 <= value <= 1.0:
        raise ValueError(f"{column} must be a probability in [0, 1], got {value}")
    if column in _NON_NEGATIVE_COLUMNS and value < 0:
        raise ValueError(f"{column} must be non-negative, got {value}")
    return value


def _convert_json(column: str, value: Any) -> Any:
    if column in _BOOL_COLUMNS:
        if not isinstance(value, bool):
            raise ValueError(f"{column} must be true or false, got {value!r}")
        return value
    if column in _TEXT_COLUMNS:
        if not isinstance(value, str) or not value:
            raise ValueError(f"{column} must be a non-empty string, got {value!r}")
        return value
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise ValueError(f"{column} must be a number, got {value!r}")
    if column in _INT_COLUMNS:
        if not isinstance(value, int):
            raise ValueError(f"{column} must be an integer, got {value!r}")
        return _checked_number(column, value)
    return _checked_number(column, float(value))


def _skip_whitespace(text: str, position: int) -> int:
    match = _WHITESPACE.match(text, position)
    return match.end() if match else position


def _line_of(text: str, position: int) -> int:
    return text.count("\n", 0, position) + 1


def _json_records(text: str) -> list[tuple[int, Any]]:
    """Elements of a top-level JSON array, each with the line it starts on."""
    decoder = json.JSONDecoder()
    position = _skip_whitespace(text, 0)
    if not text.startswith("[", position):
        raise ResultParseError(_line_of(text, position), "expected a JSON array of rows")
    position = _skip_whitespace(text, position + 1)
    records: list[tuple[int, Any]] = []
    if text.startswith("]", position):
        return records
    try:
        while True:
            record, end = decoder.raw_decode(text, position)
            records.append((_line_of(text, position), record))
            position = _skip_whitespace(text, end)
            if text.startswith(",", position):
                position = _skip_whitespace(text, position + 1)
            elif text.startswith("]", position):
                break
            else:
                raise ResultParseError(_line_of(text, position), "expected ',' or ']'")
    except json.JSONDecodeError as e:
        raise ResultParseError(e.lineno, e.msg) from e
    trailing = _skip_whitespace(text, position + 1)
    if trailing != len(text):
        raise ResultParseError(_line_of(text, trailing), "unexpected data after the row array")
    return records


def _build_row(values: dict[str, Any], has_arq: bool) -> ResultRow:
    arq = None
    if has_arq:
        arq = ArqColumns(
            eta=values["eta"], p_err=values["p_err"], mean_rounds=values["mean_rounds"]
        )
    return ResultRow(**{column: values[column] for column in RESULT_COLUMNS}, arq=arq)


@injectable(as_type=ResultStore)
class CsvResultStore(ResultStore):
    def serialize(self, rows: list[ResultRow], fmt: ResultFormat) -> str:
        columns = _columns(rows)
        if fmt is ResultFormat.JSON:
            records = [_row_values(row, columns) for row in rows]
            return json.dumps(records, indent=2) + "\n"

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            values = _row_values(row, columns)
            writer.writerow([_cell_text(column, values[column]) for column in columns])
        return buffer.getvalue()

    def parse(self, text: str, fmt: ResultFormat) -> list[ResultRow]:
        if fmt is ResultFormat.JSON:
            return self._parse_json(text)
        return self._parse_csv(text)

    def _parse_csv(self, text: str) -> list[ResultRow]:
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header is None:
            raise ResultParseError(1, "missing header row")
        columns = tuple(header)
        if columns not in (RESULT_COLUMNS, RESULT_COLUMNS + ARQ_COLUMNS):
            raise ResultParseError(1, f"unexpected header {','.join(header)}")
        has_arq = len(columns) > len(RESULT_COLUMNS)

        rows = []
        for cells in reader:
            line_number = reader.line_num
            if not cells:
                continue
            if len(cells) != len(columns):
                raise ResultParseError(
                    line_number, f"expected {len(columns)} fields, found {len(cells)}"
                )
            try:
                values = {
                    column: _convert(column, cell)
                    for column, cell in zip(columns, cells, strict=True)
                }
            except ValueError as e:
                raise ResultParseError(line_number, str(e)) from e
            rows.append(_build_row(values, has_arq))
        return rows

    def _parse_json(self, text: str) -> list[ResultRow]:
        rows = []
        for line_number, record in _json_records(text):
            if not isinstance(record, dict):
                raise ResultParseError(line_number, "row is not an object")
            has_arq = all(column in record for column in ARQ_COLUMNS)
            columns = RESULT_COLUMNS + ARQ_COLUMNS if has_arq else RESULT_COLUMNS
            missing = [column for column in RESULT_COLUMNS if column not in record]
            if missing:
                raise ResultParseError(line_number, f"row is missing {', '.join(missing)}")
            try:
                values = {column: _convert_json(column, record[column]) for column in columns}
            except ValueError as e:
                raise ResultParseError(line_number, str(e)) from e
            rows.append(_build_row(values, has_arq))
        return rows

    def write_rows(self, rows: list[ResultRow], path: Path, fmt: ResultFormat):
        path.write_text(self.serialize(rows, fmt), encoding="utf-8")

    def read_rows(self, path: Path) -> list[ResultRow]:
        fmt = ResultFormat.JSON if path.suffix.lower() == ".json" else ResultFormat.CSV
        return self.parse(path.read_text(encoding="utf-8"), fmt)
