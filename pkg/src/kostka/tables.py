"""Partition-labeled exact integer tables and their pretty/CSV/JSON forms."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError, VerificationError
from .partitions import Partition, format_partition, is_partition


@dataclass
class IntegerTable:
    """A k x k exact-integer matrix with partition row/column labels.

    The same shape serves as Frobenius table, Kostka matrix, inverse Kostka
    matrix and irreducible character table; `kind` records which.  Labels
    are stored in canonical descending lexicographic order.
    """

    kind: str
    n: int
    row_labels: tuple[Partition, ...]
    col_labels: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def entry(self, row: Partition, col: Partition) -> int:
        i = self.row_labels.index(tuple(row))
        j = self.col_labels.index(tuple(col))
        return self.values[i][j]

    def row(self, label: Partition) -> tuple[int, ...]:
        return self.values[self.row_labels.index(tuple(label))]

    def column(self, label: Partition) -> tuple[int, ...]:
        j = self.col_labels.index(tuple(label))
        return tuple(row[j] for row in self.values)


def make_table(kind, n, row_labels, col_labels, values) -> IntegerTable:
    values = tuple(tuple(int(v) for v in row) for row in values)
    row_labels = tuple(tuple(p) for p in row_labels)
    col_labels = tuple(tuple(p) for p in col_labels)
    if len(values) != len(row_labels) or any(
        len(row) != len(col_labels) for row in values
    ):
        raise InputError("table shape does not match its labels")
    return IntegerTable(kind, n, row_labels, col_labels, values)


def matmul(a: IntegerTable, b: IntegerTable, kind: str) -> IntegerTable:
    if a.col_labels != b.row_labels:
        raise InputError("inner labels do not match")
    values = tuple(
        tuple(
            sum(a.values[i][t] * b.values[t][j] for t in range(len(a.col_labels)))
            for j in range(len(b.col_labels))
        )
        for i in range(len(a.row_labels))
    )
    return IntegerTable(kind, a.n, a.row_labels, b.col_labels, values)


def is_identity(values) -> bool:
    return all(
        v == (1 if i == j else 0)
        for i, row in enumerate(values)
        for j, v in enumerate(row)
    )


def invert_unitriangular(values) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of a lower-unitriangular integer matrix by substitution."""
    k = len(values)
    for i in range(k):
        if values[i][i] != 1:
            raise VerificationError(f"diagonal entry at {i} is {values[i][i]}, not 1")
        if any(values[i][j] for j in range(i + 1, k)):
            raise VerificationError(f"matrix is not lower triangular at row {i}")
    inv = [[0] * k for _ in range(k)]
    for i in range(k):
        inv[i][i] = 1
        for j in range(i - 1, -1, -1):
            inv[i][j] = -sum(values[i][t] * inv[t][j] for t in range(j, i))
    return tuple(tuple(row) for row in inv)


# ---------------------------------------------------------------------------
# serialization

def to_json_dict(table: IntegerTable) -> dict:
    return {
        "n": table.n,
        "kind": table.kind,
        "order": "descending-lex",
        "row_labels": [list(p) for p in table.row_labels],
        "col_labels": [list(p) for p in table.col_labels],
        "values": [[str(v) for v in row] for row in table.values],
    }


def from_json_dict(data: dict) -> IntegerTable:
    try:
        rows = [tuple(int(p) for p in lab) for lab in data["row_labels"]]
        cols = [tuple(int(p) for p in lab) for lab in data["col_labels"]]
        values = [[int(v) for v in row] for row in data["values"]]
        table = make_table(data["kind"], int(data["n"]), rows, cols, values)
    except (KeyError, TypeError, ValueError) as exc:
        raise VerificationError(f"malformed table JSON: {exc}") from None
    if data.get("order") != "descending-lex":
        raise VerificationError("table JSON does not declare descending-lex order")
    if not all(is_partition(p) for p in table.row_labels + table.col_labels):
        raise VerificationError("table JSON contains invalid partition labels")
    return table


def to_json_text(table: IntegerTable) -> str:
    return json.dumps(to_json_dict(table), indent=2)


def from_json_text(text: str) -> IntegerTable:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise VerificationError(f"malformed table JSON: {exc}") from None
    return from_json_dict(data)


def to_csv(table: IntegerTable) -> str:
    lines = ["," + ",".join(format_partition(p) for p in table.col_labels)]
    for label, row in zip(table.row_labels, table.values):
        lines.append(format_partition(label) + "," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def from_csv(text: str, kind: str) -> IntegerTable:
    from .partitions import parse_partition

    lines = [line for line in text.splitlines() if line.strip()]
    header = lines[0].split(",")
    cols = [parse_partition(cell) for cell in header[1:]]
    rows = []
    values = []
    for line in lines[1:]:
        cells = line.split(",")
        rows.append(parse_partition(cells[0]))
        values.append([int(cell) for cell in cells[1:]])
    n = sum(rows[0]) if rows else 0
    return make_table(kind, n, rows, cols, values)


def pretty(table: IntegerTable, class_sizes=None) -> str:
    """Right-aligned text table; class sizes go in a header row when given."""
    col_heads = [format_partition(p) for p in table.col_labels]
    row_heads = [format_partition(p) for p in table.row_labels]
    body = [[str(v) for v in row] for row in table.values]

    grid = []
    if class_sizes is not None:
        grid.append(["m"] + [str(s) for s in class_sizes])
    grid.append([table.kind] + col_heads)
    for head, row in zip(row_heads, body):
        grid.append([head] + row)

    widths = [
        max(len(grid[r][c]) for r in range(len(grid))) for c in range(len(grid[0]))
    ]
    lines = []
    for row in grid:
        lines.append(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
        )
    return "\n".join(lines)
