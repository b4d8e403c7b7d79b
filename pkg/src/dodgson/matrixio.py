"""Matrix files and JSONL traces.

Text format: an optional header line holding just ``n``, then ``n`` lines of
``n`` whitespace-separated decimal integers.  Several matrices may share a
file, separated by blank lines.  JSON format: ``{"n": 3, "rows": [[...]]}``
(entries may be JSON integers or decimal strings), or a list of such objects.

Big integers always leave as decimal strings in JSON.
"""
from __future__ import annotations

import json
import re
import sys
from pathlib import Path
from typing import Iterable

from .condense import (CondenseLevel, Done, HybridFallback, PivotSelected,
                       RepairApplied, ZeroDetected)
from .matrix import Matrix

_INT = re.compile(r"[+-]?\d+\Z")


class MatrixParseError(ValueError):
    pass


def allow_big_ints() -> None:
    # CPython >= 3.10.7 caps int<->str conversion at 4300 digits by default.
    if hasattr(sys, "set_int_max_str_digits") and sys.get_int_max_str_digits():
        sys.set_int_max_str_digits(0)


def parse_int(token: str) -> int:
    if not _INT.match(token):
        raise MatrixParseError(f"not an integer: {token!r}")
    allow_big_ints()
    return int(token)


def _parse_block(lines: list[str]) -> Matrix:
    rows = [line.split() for line in lines]
    # A lone token followed by more lines can only be a header: a headerless
    # matrix with a one-entry first row is 1x1 and has no further lines.
    if len(rows) > 1 and len(rows[0]) == 1:
        n = _header(rows[0][0])
        rows = rows[1:]
    else:
        n = len(rows[0])
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MatrixParseError(f"expected {n} rows of {n} integers")
    return Matrix([[parse_int(t) for t in r] for r in rows])


def _header(token: str) -> int:
    n = parse_int(token)
    if n < 1:
        raise MatrixParseError(f"bad order {n}")
    return n


def parse_text(text: str) -> list[Matrix]:
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    if not blocks:
        raise MatrixParseError("no matrix found")
    return [_parse_block(b) for b in blocks]


def _json_entry(x) -> int:
    if isinstance(x, bool):
        raise MatrixParseError(f"not an integer: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return parse_int(x.strip())
    raise MatrixParseError(f"not an integer: {x!r}")


def _from_json_obj(obj) -> Matrix:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise MatrixParseError('JSON matrix needs a "rows" field')
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MatrixParseError('"rows" must be a non-empty list of lists')
    n = obj.get("n", len(rows))
    if isinstance(n, bool) or not isinstance(n, int):
        raise MatrixParseError('"n" must be an integer')
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MatrixParseError(f"expected {n} rows of {n} integers")
    return Matrix([[_json_entry(x) for x in r] for r in rows])


def parse_json(text: str) -> list[Matrix]:
    allow_big_ints()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc}") from None
    docs = doc if isinstance(doc, list) else [doc]
    if not docs:
        raise MatrixParseError("no matrix found")
    return [_from_json_obj(d) for d in docs]


def parse_matrices(text: str) -> list[Matrix]:
    """Sniff the format: JSON when the first non-space character is { or [."""
    stripped = text.lstrip()
    if stripped[:1] in ("{", "["):
        return parse_json(text)
    return parse_text(text)


def read_matrices(path: str | Path) -> list[Matrix]:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise MatrixParseError(f"cannot read {path}: {exc}") from None
    return parse_matrices(text)


def format_matrix(m: Matrix, header: bool = True) -> str:
    allow_big_ints()
    lines = [str(m.order)] if header else []
    lines.extend(" ".join(str(x) for x in row) for row in m.rows)
    return "\n".join(lines) + "\n"


def format_matrices(ms: Iterable[Matrix], header: bool = True) -> str:
    return "\n".join(format_matrix(m, header) for m in ms)


def matrix_to_json(m: Matrix) -> dict:
    allow_big_ints()
    return {"n": m.order, "rows": [[str(x) for x in row] for row in m.rows]}


def event_to_dict(ev) -> dict:
    allow_big_ints()
    d = {"event": ev.tag}
    if isinstance(ev, CondenseLevel):
        d["level"] = ev.k
    elif isinstance(ev, Done):
        d["det"] = str(ev.determinant)
    else:
        site = ev.site
        d["level"] = site.level
        d["site"] = [site.row, site.col]
        if isinstance(ev, PivotSelected):
            d["pivot"] = [ev.r, ev.s]
            d["alpha"] = str(ev.alpha)
        elif isinstance(ev, (RepairApplied, HybridFallback)):
            d["value"] = str(ev.value)
            if isinstance(ev, HybridFallback):
                sp = ev.minor_span
                d["span"] = [sp.row_start, sp.row_end, sp.col_start, sp.col_end]
        elif not isinstance(ev, ZeroDetected):
            raise TypeError(f"unknown trace event {ev!r}")
    return d


def write_trace(events: Iterable, path: str | Path) -> None:
    with open(path, "w") as fh:
        for ev in events:
            fh.write(json.dumps(event_to_dict(ev)) + "\n")


def read_trace(path: str | Path) -> list[dict]:
    allow_big_ints()
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]
