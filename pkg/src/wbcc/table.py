"""Cayley tables with constant 0, the weak BCC axioms, and classification.

Elements are the integers ``0 .. n-1`` and the constant is always ``0``.
Everything here is a pure function of an immutable :class:`CayleyTable`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from types import MappingProxyType
from typing import Mapping, Optional, Sequence, Tuple

Witness = Tuple[int, ...]

AXIOMS = ("i", "ii", "iii", "iv")


class TableError(ValueError):
    """The data does not describe an n x n table over {0..n-1}."""


class NotWeakBCCError(ValueError):
    """An operation needing a weak BCC-algebra got a table failing an axiom."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        failed = ", ".join(f"({a}) at {report.witness[a]}" for a in report.failed())
        super().__init__(f"not a weak BCC-algebra: axiom {failed}")


class InvariantViolation(RuntimeError):
    """A derived structure broke a law that holds in every weak BCC-algebra."""


@dataclass(frozen=True)
class CayleyTable:
    """An n x n operation table stored row-major: ``cells[x*n + y] == x*y``."""

    n: int
    cells: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise TableError(f"order must be a positive integer, got {self.n!r}")
        cells = tuple(self.cells)
        if len(cells) != self.n * self.n:
            raise TableError(f"expected {self.n * self.n} entries, got {len(cells)}")
        for k, v in enumerate(cells):
            if not isinstance(v, int) or not 0 <= v < self.n:
                x, y = divmod(k, self.n)
                raise TableError(f"entry {x}*{y} = {v!r} is outside 0..{self.n - 1}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CayleyTable":
        n = len(rows)
        for x, row in enumerate(rows):
            if len(row) != n:
                raise TableError(f"row {x} has {len(row)} entries, expected {n}")
        return cls(n, tuple(v for row in rows for v in row))

    def __call__(self, x: int, y: int) -> int:
        return self.cells[x * self.n + y]

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.n
        return tuple(self.cells[x * n:(x + 1) * n] for x in range(n))

    def relabel(self, perm: Sequence[int]) -> "CayleyTable":
        """Isomorphic copy where element ``x`` is renamed ``perm[x]``.

        ``perm`` must be a permutation of ``0..n-1`` with ``perm[0] == 0``.
        """
        n = self.n
        if sorted(perm) != list(range(n)) or perm[0] != 0:
            raise ValueError(f"not a 0-fixing permutation of 0..{n - 1}: {perm!r}")
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        return CayleyTable(
            n, tuple(perm[self(inv[i], inv[j])] for i in range(n) for j in range(n))
        )

    def __str__(self):
        width = len(str(self.n - 1))
        head = "* | " + " ".join(f"{y:>{width}}" for y in range(self.n))
        lines = [head, "-" * len(head)]
        for x, row in enumerate(self.rows):
            lines.append(f"{x:>{width}} | " + " ".join(f"{v:>{width}}" for v in row))
        return "\n".join(lines)


@lru_cache(maxsize=None)
def scan_order(n: int, arity: int) -> Tuple[Witness, ...]:
    """Order in which candidate witnesses are tried.

    Tuples not involving the constant come first, then the rest, each group in
    row-major order.  Witnesses built only from non-constant elements are the
    informative ones; the fixed order keeps every reported witness stable.
    """
    every = list(product(range(n), repeat=arity))
    return tuple([w for w in every if 0 not in w] + [w for w in every if 0 in w])


@dataclass(frozen=True)
class AxiomReport:
    holds: Mapping[str, bool]
    witness: Mapping[str, Optional[Witness]]

    @property
    def ok(self) -> bool:
        return all(self.holds.values())

    def failed(self) -> Tuple[str, ...]:
        return tuple(a for a in AXIOMS if not self.holds[a])


def axiom_violated(t: CayleyTable, axiom: str, w: Witness) -> bool:
    """Re-evaluate ``axiom`` at witness ``w``; True when it is violated there."""
    if axiom == "i":
        x, y, z = w
        return t(t(t(x, y), t(z, y)), t(x, z)) != 0
    if axiom == "ii":
        (x,) = w
        return t(x, x) != 0
    if axiom == "iii":
        (x,) = w
        return t(x, 0) != x
    if axiom == "iv":
        x, y = w
        return x != y and t(x, y) == 0 and t(y, x) == 0
    raise KeyError(axiom)


@lru_cache(maxsize=4096)
def check_axioms(t: CayleyTable) -> AxiomReport:
    """Evaluate axioms (i)-(iv) exhaustively and attach the first violation of each."""
    n = t.n
    witness: dict = {a: None for a in AXIOMS}
    for w in scan_order(n, 3):
        if axiom_violated(t, "i", w):
            witness["i"] = w
            break
    for x in range(n):
        if witness["ii"] is None and axiom_violated(t, "ii", (x,)):
            witness["ii"] = (x,)
        if witness["iii"] is None and axiom_violated(t, "iii", (x,)):
            witness["iii"] = (x,)
    for x, y in scan_order(n, 2):
        if x < y and axiom_violated(t, "iv", (x, y)):
            witness["iv"] = (x, y)
            break
    holds = {a: witness[a] is None for a in AXIOMS}
    return AxiomReport(MappingProxyType(holds), MappingProxyType(witness))


def is_weak_bcc(t: CayleyTable) -> bool:
    return check_axioms(t).ok


def require_weak_bcc(t: CayleyTable) -> CayleyTable:
    report = check_axioms(t)
    if not report.ok:
        raise NotWeakBCCError(report)
    return t


@dataclass(frozen=True)
class Classification:
    is_weak_bcc: bool
    is_bcc: bool
    is_bci: bool
    is_bck: bool
    is_proper_weak: bool
    is_proper_bcc: bool
    # x with 0*x != 0, and (x, y, z) with (x*y)*z != (x*z)*y reported with y > z
    bcc_witness: Optional[Witness] = field(default=None, compare=False)
    bci_witness: Optional[Witness] = field(default=None, compare=False)

    def flags(self) -> dict:
        return {
            "is_weak_bcc": self.is_weak_bcc,
            "is_bcc": self.is_bcc,
            "is_bci": self.is_bci,
            "is_bck": self.is_bck,
            "is_proper_weak": self.is_proper_weak,
            "is_proper_bcc": self.is_proper_bcc,
        }


def bci_violated(t: CayleyTable, w: Witness) -> bool:
    x, y, z = w
    return t(t(x, y), z) != t(t(x, z), y)


@lru_cache(maxsize=4096)
def classify(t: CayleyTable) -> Classification:
    if not is_weak_bcc(t):
        return Classification(False, False, False, False, False, False)
    bcc_witness = next(((x,) for x in range(1, t.n) if t(0, x) != 0), None)
    bci_witness = next((w for w in scan_order(t.n, 3) if bci_violated(t, w)), None)
    if bci_witness is not None:
        x, y, z = bci_witness
        # the identity is symmetric in y and z
        bci_witness = (x, max(y, z), min(y, z))
    bcc = bcc_witness is None
    bci = bci_witness is None
    return Classification(
        is_weak_bcc=True,
        is_bcc=bcc,
        is_bci=bci,
        is_bck=bcc and bci,
        is_proper_weak=not bcc and not bci,
        is_proper_bcc=bcc and not bci,
        bcc_witness=bcc_witness,
        bci_witness=bci_witness,
    )


def phi(t: CayleyTable, x: int) -> int:
    """The self map x -> 0*x."""
    require_weak_bcc(t)
    return t(0, x)


def phi_square(t: CayleyTable, x: int) -> int:
    require_weak_bcc(t)
    return t(0, t(0, x))
