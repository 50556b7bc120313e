"""Canonical forms: the lexicographically least relabeling fixing 0."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from ..table import CayleyTable, require_weak_bcc
from ._pysearch import relabel_sources


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    cells: Tuple[int, ...]

    @property
    def table(self) -> CayleyTable:
        return CayleyTable(self.n, self.cells)


@lru_cache(maxsize=None)
def _relabelings(n):
    return relabel_sources(n)


def _least_relabeling(n, cells):
    best = list(cells)
    nn = n * n
    for perm, src in _relabelings(n):
        for k in range(nn):
            v = perm[cells[src[k]]]
            if v != best[k]:
                if v < best[k]:
                    best = [perm[cells[s]] for s in src]
                break
    return tuple(best)


@lru_cache(maxsize=65536)
def canonical_form(t: CayleyTable) -> CanonicalForm:
    """Brute force over all (n-1)! relabelings that fix 0."""
    require_weak_bcc(t)
    return CanonicalForm(t.n, _least_relabeling(t.n, t.cells))


def is_canonical(t: CayleyTable) -> bool:
    return canonical_form(t).cells == t.cells


def are_isomorphic(t1: CayleyTable, t2: CayleyTable) -> bool:
    if t1.n != t2.n:
        return False
    return canonical_form(t1) == canonical_form(t2)
