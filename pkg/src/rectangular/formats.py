"""Text formats: tables, partial arrays, graph pairs, matrix pairs, and the
JSON census emission.

Files are always 0-based.  Parsing and rendering round-trip bit-exactly
after one normalization pass; renderers accept a one_based flag that shifts
displayed symbols only.
"""

from __future__ import annotations

import json

from .census import CensusResult
from .core import BoolMatrix, GraphPair, Groupoid, PartialArray, bits_of


class FormatError(ValueError):
    """Malformed input text; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _lines(text: str) -> list[str]:
    return text.splitlines()


def _parse_order(lines: list[str]) -> int:
    if not lines:
        raise FormatError(1, "empty input; expected an order line")
    token = lines[0].strip()
    try:
        order = int(token)
    except ValueError:
        raise FormatError(1, f"expected the order, got {token!r}") from None
    if order < 1:
        raise FormatError(1, f"order must be positive, got {order}")
    return order


def _parse_grid_line(line_no: int, raw: str, order: int, allow_empty: bool):
    tokens = raw.split()
    if len(tokens) != order:
        raise FormatError(line_no, f"expected {order} entries, got {len(tokens)}")
    row = []
    for col, token in enumerate(tokens):
        if allow_empty and token == ".":
            row.append(None)
            continue
        try:
            value = int(token)
        except ValueError:
            raise FormatError(line_no, f"bad entry {token!r} in column {col}") from None
        if not 0 <= value < order:
            raise FormatError(
                line_no, f"entry {value} out of range 0..{order - 1} in column {col}"
            )
        row.append(value)
    return row


def parse_table(text: str) -> Groupoid:
    lines = _lines(text)
    order = _parse_order(lines)
    if len(lines) < 1 + order:
        raise FormatError(len(lines) + 1, f"expected {order} table lines")
    rows = []
    for i in range(order):
        rows.append(tuple(_parse_grid_line(i + 2, lines[1 + i], order, False)))
    return Groupoid(order, tuple(rows))


def render_table(g: Groupoid, one_based: bool = False) -> str:
    shift = 1 if one_based else 0
    body = "\n".join(" ".join(str(e + shift) for e in row) for row in g.table)
    return f"{g.order}\n{body}\n"


def parse_partial(text: str) -> PartialArray:
    lines = _lines(text)
    order = _parse_order(lines)
    if len(lines) < 1 + order:
        raise FormatError(len(lines) + 1, f"expected {order} array lines")
    rows = []
    for i in range(order):
        rows.append(tuple(_parse_grid_line(i + 2, lines[1 + i], order, True)))
    return PartialArray(order, tuple(rows))


def render_partial(p: PartialArray, one_based: bool = False) -> str:
    shift = 1 if one_based else 0
    body = "\n".join(
        " ".join("." if e is None else str(e + shift) for e in row)
        for row in p.cells
    )
    return f"{p.order}\n{body}\n"


def _parse_bit_rows(lines: list[str], start: int, order: int, what: str) -> tuple[int, ...]:
    rows = []
    for i in range(order):
        line_no = start + i + 1
        if start + i >= len(lines):
            raise FormatError(line_no, f"missing {what} row {i}")
        raw = lines[start + i].strip()
        if len(raw) != order or any(ch not in "01" for ch in raw):
            raise FormatError(line_no, f"expected {order} characters of 0/1, got {raw!r}")
        rows.append(sum(1 << j for j, ch in enumerate(raw) if ch == "1"))
    return tuple(rows)


def _render_bit_rows(rows: tuple[int, ...], order: int) -> str:
    return "\n".join(
        "".join("1" if row >> j & 1 else "0" for j in range(order)) for row in rows
    )


def parse_graph_pair(text: str) -> GraphPair:
    lines = _lines(text)
    order = _parse_order(lines)
    red = _parse_bit_rows(lines, 1, order, "red")
    sep = 1 + order
    if sep >= len(lines) or lines[sep].strip():
        raise FormatError(sep + 1, "expected a blank line between the relations")
    green = _parse_bit_rows(lines, sep + 1, order, "green")
    return GraphPair(order, red, green)


def render_graph_pair(gp: GraphPair) -> str:
    return (f"{gp.order}\n{_render_bit_rows(gp.red, gp.order)}\n\n"
            f"{_render_bit_rows(gp.green, gp.order)}\n")


def parse_matrix(text: str) -> BoolMatrix:
    lines = _lines(text)
    order = _parse_order(lines)
    return BoolMatrix(order, _parse_bit_rows(lines, 1, order, "matrix"))


def render_matrix(m: BoolMatrix) -> str:
    return f"{m.order}\n{_render_bit_rows(m.rows, m.order)}\n"


def parse_matrix_pair(text: str) -> tuple[BoolMatrix, BoolMatrix]:
    """Two matrices in the paired two-grid layout (same as graph pairs)."""
    gp = parse_graph_pair(text)
    return BoolMatrix(gp.order, gp.red), BoolMatrix(gp.order, gp.green)


def render_matrix_pair(a: BoolMatrix, b: BoolMatrix) -> str:
    if a.order != b.order:
        raise ValueError(f"matrix orders differ: {a.order} vs {b.order}")
    return (f"{a.order}\n{_render_bit_rows(a.rows, a.order)}\n\n"
            f"{_render_bit_rows(b.rows, b.order)}\n")


def census_json(result: CensusResult, kind: str) -> str:
    payload = {
        "order": result.order,
        "class": kind,
        "mode": result.mode,
        "count": result.count,
        "tables": None if result.tables is None
        else [list(g.flat()) for g in result.tables],
    }
    return json.dumps(payload, indent=2) + "\n"
