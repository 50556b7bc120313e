"""Enumeration of weak BCC-algebras of a fixed order up to isomorphism.

The kernel fills the table cell by cell and emits lex-least tables only.  Each
result is still canonicalized and collected in a seen-set, so correctness does
not rest on the in-search pruning.  With several workers the tree is split by
the assignments of row 0 (the first unforced row); workers share nothing and
their results are merged in sorted canonical order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Tuple, Union

from ..properties import solidity
from ..table import CayleyTable, classify
from . import _flags
from .canon import canonical_form
from .catalog import CatalogEntry, IsoClassCatalog
from .kernel import free_cells, get_kernel
from .masks import property_mask

DEFAULT_MAX_ORDER = 6


class OrderCapError(ValueError):
    pass


@dataclass(frozen=True)
class Filter:
    """A pure predicate on algebras, plus kernel flags that may prune for it."""

    name: str
    predicate: Callable[[CayleyTable], bool] = field(compare=False)
    prune: int = 0

    def __call__(self, t: CayleyTable) -> bool:
        return self.predicate(t)


FILTERS = {
    f.name: f
    for f in (
        Filter("proper", lambda t: classify(t).is_proper_weak, _flags.NOT_BCC),
        Filter("bcc", lambda t: classify(t).is_bcc, _flags.BCC),
        Filter("bci", lambda t: classify(t).is_bci, _flags.BCI),
        Filter("bck", lambda t: classify(t).is_bck, _flags.BCC | _flags.BCI),
        Filter("solid", lambda t: solidity(t).solid, _flags.SOLID),
        Filter("right_solid", lambda t: solidity(t).right_solid),
        Filter("supersolid", lambda t: solidity(t).supersolid, _flags.SOLID),
    )
}

FilterLike = Union[str, Filter, Callable[[CayleyTable], bool]]


def as_filter(f: FilterLike) -> Filter:
    if isinstance(f, Filter):
        return f
    if isinstance(f, str):
        try:
            return FILTERS[f]
        except KeyError:
            raise ValueError(f"unknown filter {f!r}; known: {sorted(FILTERS)}") from None
    if callable(f):
        return Filter(getattr(f, "__name__", "custom"), f)
    raise TypeError(f"not a filter: {f!r}")


@dataclass(frozen=True)
class SearchConfig:
    n: int
    filters: Tuple[Filter, ...] = ()
    count_only: bool = False
    worker_count: int = 1
    max_order: int = DEFAULT_MAX_ORDER
    allow_large: bool = False
    backend: Union[str, None] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"order must be >= 1, got {self.n!r}")
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")
        object.__setattr__(self, "filters", tuple(as_filter(f) for f in self.filters))

    @property
    def prune_flags(self) -> int:
        flags = _flags.LEXMIN
        for f in self.filters:
            flags |= f.prune
        return flags


def default_worker_count() -> int:
    env = os.environ.get("WBCC_THREADS")
    if env:
        count = int(env)
        if count < 1:
            raise ValueError(f"WBCC_THREADS must be >= 1, got {env!r}")
        return count
    return os.cpu_count() or 1


def _search_subtree(args):
    n, flags, prefix, backend = args
    results, _ = get_kernel(backend)(n, flags, prefix)
    return results


def _raw_tables(cfg: SearchConfig) -> Iterable[Tuple[int, ...]]:
    search = get_kernel(cfg.backend)
    flags = cfg.prune_flags
    if cfg.worker_count == 1 or cfg.n < 3:
        results, _ = search(cfg.n, flags)
        return results
    row0 = sum(1 for c in free_cells(cfg.n) if c < cfg.n)
    prefixes, _ = search(cfg.n, flags, (), row0)
    jobs = [(cfg.n, flags, p, cfg.backend) for p in prefixes]
    out = []
    with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
        for part in pool.map(_search_subtree, jobs):
            out.extend(part)
    return out


def enumerate_classes(cfg: SearchConfig) -> Union[IsoClassCatalog, int]:
    """All isomorphism classes of order ``cfg.n`` passing every filter.

    Returns the count when ``cfg.count_only`` is set, else a catalog sorted by
    canonical form.
    """
    if cfg.n > cfg.max_order and not cfg.allow_large:
        raise OrderCapError(f"order {cfg.n} exceeds the cap {cfg.max_order}; set allow_large (CLI: --allow-large) to override")
    seen = set()
    accepted = []
    for cells in _raw_tables(cfg):
        form = canonical_form(CayleyTable(cfg.n, cells))
        if form in seen:
            continue
        seen.add(form)
        t = form.table
        if all(f(t) for f in cfg.filters):
            accepted.append(form)
    forms = sorted(accepted)
    if cfg.count_only:
        return len(forms)
    entries = tuple(CatalogEntry(f.cells, property_mask(f.table)) for f in forms)
    return IsoClassCatalog(cfg.n, entries, tuple(f.name for f in cfg.filters))
