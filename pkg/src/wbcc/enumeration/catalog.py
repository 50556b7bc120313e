"""Catalog files of isomorphism classes.

Text, LF line endings, ``#`` starts a comment line::

    # filters: proper
    order=4
    0,0,2,2,1,0,2,2,2,2,0,0,3,3,1,0;e28

Each entry is the canonical table flattened row-major and its property mask
in lowercase hex (see ``masks.MASK_BITS``).  Reading re-validates every entry.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import IO, Optional, Tuple, Union

from ..table import CayleyTable, TableError, check_axioms
from .canon import canonical_form
from .masks import property_mask

_ENTRY = re.compile(r"^([0-9]+(?:,[0-9]+)*);([0-9a-f]+)$")
_HEADER = re.compile(r"^order=([1-9][0-9]*)$")
_FILTERS = re.compile(r"^# filters: ?(.*)$")


class CatalogError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True, order=True)
class CatalogEntry:
    cells: Tuple[int, ...]
    mask: int


@dataclass(frozen=True)
class IsoClassCatalog:
    order: int
    entries: Tuple[CatalogEntry, ...]
    filters: Tuple[str, ...] = field(default=(), compare=False)

    def __len__(self):
        return len(self.entries)

    def tables(self):
        return [CayleyTable(self.order, e.cells) for e in self.entries]


def dumps(c: IsoClassCatalog) -> str:
    lines = ["# weak BCC-algebras up to isomorphism"]
    if c.filters:
        lines.append("# filters: " + ",".join(c.filters))
    lines.append(f"order={c.order}")
    for e in c.entries:
        lines.append(",".join(map(str, e.cells)) + f";{e.mask:x}")
    return "\n".join(lines) + "\n"


def loads(text: str, expected_order: Optional[int] = None) -> IsoClassCatalog:
    order = None
    filters: Tuple[str, ...] = ()
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#"):
            m = _FILTERS.match(line)
            if m and order is None:
                filters = tuple(f for f in m.group(1).split(",") if f)
            continue
        if order is None:
            m = _HEADER.match(line)
            if not m:
                raise CatalogError(f"expected header 'order=<n>', got {line!r}", lineno)
            order = int(m.group(1))
            if expected_order is not None and order != expected_order:
                raise CatalogError(
                    f"order mismatch: file has order {order}, expected {expected_order}", lineno
                )
            continue
        m = _ENTRY.match(line)
        if not m:
            raise CatalogError(f"malformed entry {line!r}", lineno)
        cells = tuple(int(v) for v in m.group(1).split(","))
        mask = int(m.group(2), 16)
        if len(cells) != order * order:
            raise CatalogError(
                f"order mismatch: {len(cells)} entries, expected {order * order}", lineno
            )
        try:
            t = CayleyTable(order, cells)
        except TableError as exc:
            raise CatalogError(str(exc), lineno) from None
        report = check_axioms(t)
        if not report.ok:
            axiom = report.failed()[0]
            raise CatalogError(
                f"entry fails axiom ({axiom}) at {report.witness[axiom]}", lineno
            )
        if canonical_form(t).cells != cells:
            raise CatalogError("entry is not in canonical form", lineno)
        if cells in seen:
            raise CatalogError("duplicate entry", lineno)
        seen.add(cells)
        expected = property_mask(t)
        if mask != expected:
            raise CatalogError(f"property mask {mask:x} does not match {expected:x}", lineno)
        entries.append(CatalogEntry(cells, mask))
    if order is None:
        raise CatalogError("missing header 'order=<n>'")
    return IsoClassCatalog(order, tuple(entries), filters)


PathOrFile = Union[str, "os.PathLike[str]", IO[str]]


def catalog_write(c: IsoClassCatalog, destination: PathOrFile) -> None:
    text = dumps(c)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def catalog_read(source: PathOrFile, expected_order: Optional[int] = None) -> IsoClassCatalog:
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8", newline="") as fh:
            text = fh.read()
    return loads(text, expected_order)
