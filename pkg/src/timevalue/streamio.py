"""Reading cash-flow streams from CSV or JSON files.

CSV files start with the header ``time,amount`` and hold one flow per row,
using ``.`` as decimal separator and no thousands separators. Files ending in
``.json`` hold a list of ``{"time": ..., "amount": ...}`` objects instead.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from pathlib import Path

from timevalue.core import CashFlowStream, make_stream
from timevalue.errors import OutOfDomain

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


class StreamFormatError(OutOfDomain):
    """A stream file could not be parsed. ``where`` locates the bad entry."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


def _number(text: str, where: str, field: str) -> float:
    text = text.strip()
    if not _NUMBER.fullmatch(text):
        raise StreamFormatError(where, f"{field} {text!r} is not a decimal number")
    value = float(text)
    if not math.isfinite(value):
        raise StreamFormatError(where, f"{field} {text!r} is out of range")
    return value


def _build(pairs: list[tuple[float, float]], wheres: list[str]) -> CashFlowStream:
    for (t, _), where in zip(pairs, wheres):
        if t < 0:
            raise StreamFormatError(where, f"time {t!r} is negative")
    return make_stream(pairs)


def parse_csv(text: str, name: str = "<stream>") -> CashFlowStream:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return make_stream([])
    header = [h.strip() for h in rows[0]]
    if header != ["time", "amount"]:
        raise StreamFormatError(f"{name}, line 1", f"expected header 'time,amount', got {','.join(rows[0])!r}")
    pairs, wheres = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        where = f"{name}, line {lineno}"
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise StreamFormatError(where, f"expected 2 fields, got {len(row)}")
        pairs.append((_number(row[0], where, "time"), _number(row[1], where, "amount")))
        wheres.append(where)
    return _build(pairs, wheres)


def parse_json(text: str, name: str = "<stream>") -> CashFlowStream:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StreamFormatError(f"{name}, line {exc.lineno}", exc.msg) from None
    if not isinstance(data, list):
        raise StreamFormatError(name, "expected a JSON list of flows")
    pairs, wheres = [], []
    for idx, entry in enumerate(data):
        where = f"{name}, entry {idx}"
        if not isinstance(entry, dict) or set(entry) != {"time", "amount"}:
            raise StreamFormatError(where, 'expected an object with keys "time" and "amount"')
        values = []
        for field in ("time", "amount"):
            v = entry[field]
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise StreamFormatError(where, f"{field} {v!r} is not a finite number")
            values.append(float(v))
        pairs.append((values[0], values[1]))
        wheres.append(where)
    return _build(pairs, wheres)


def read_stream(path: str | Path) -> CashFlowStream:
    """Load a stream, choosing JSON or CSV by file extension."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise StreamFormatError(str(path), f"cannot read file ({exc})") from None
    if path.suffix.lower() == ".json":
        return parse_json(text, str(path))
    return parse_csv(text, str(path))
