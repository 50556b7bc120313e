"""Plain-text table files laid out like printed Cayley tables.

    # Table 1
    4
    0 0 2 2
    1 0 2 2
    2 2 0 0
    3 3 1 0

Lines starting with ``#`` and blank lines are ignored.  The first data line is
the order n, followed by n rows; row x lists x*0 ... x*(n-1).
"""

from __future__ import annotations

from typing import List, Optional

from .table import CayleyTable


class TableFileError(ValueError):
    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = ":".join(str(p) for p in (path, line) if p is not None)
        super().__init__(f"{where}: {message}" if where else message)


def parse_table(text: str, path: Optional[str] = None) -> CayleyTable:
    n = None
    rows: List[List[int]] = []
    last = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise TableFileError(f"non-integer entry in {line!r}", path, lineno) from None
        if n is None:
            if len(values) != 1 or values[0] < 1:
                raise TableFileError(f"expected the order (a positive integer), got {line!r}", path, lineno)
            n = values[0]
            continue
        if len(rows) == n:
            raise TableFileError(f"more than {n} rows", path, lineno)
        if len(values) != n:
            raise TableFileError(f"row has {len(values)} entries, expected {n}", path, lineno)
        for v in values:
            if not 0 <= v < n:
                raise TableFileError(f"entry {v} outside 0..{n - 1}", path, lineno)
        rows.append(values)
    if n is None:
        raise TableFileError("empty table file", path, last or None)
    if len(rows) != n:
        raise TableFileError(f"expected {n} rows, got {len(rows)}", path, last)
    return CayleyTable.from_rows(rows)


def read_table(path: str) -> CayleyTable:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read(), str(path))


def format_table(t: CayleyTable) -> str:
    width = len(str(t.n - 1))
    lines = [str(t.n)]
    lines += [" ".join(f"{v:>{width}}" for v in row) for row in t.rows]
    return "\n".join(lines) + "\n"


def write_table(t: CayleyTable, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_table(t))
