# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; mirrors ``_pysearch.search`` exactly."""

from libc.stdlib cimport malloc, free

from ._flags import BCC, BCI, LEXMIN, NOT_BCC, SOLID
from ._pysearch import free_cells, relabel_sources

cdef enum:
    MAXN = 8
    MAXCELLS = 64


cdef struct State:
    int n
    int t[MAXCELLS]
    int ncells
    int cells[MAXCELLS]
    bint row_end[MAXCELLS]
    int depth_limit
    int nprefix
    int prefix[MAXCELLS]
    bint f_bcc, f_not_bcc, f_bci, f_solid
    int nperms
    int *perm      # nperms * n
    int *src       # nperms * n * n
    long long nodes


cdef bint axiom_one_ok(State *s) noexcept nogil:
    cdef int n = s.n
    cdef int x, y, z, a, b, c, d
    cdef int *t = s.t
    for x in range(n):
        for y in range(n):
            a = t[x * n + y]
            if a < 0:
                continue
            for z in range(n):
                b = t[z * n + y]
                d = t[x * n + z]
                if b < 0 or d < 0:
                    continue
                c = t[a * n + b]
                if c < 0:
                    continue
                if t[c * n + d] > 0:
                    return False
    return True


cdef bint bci_ok(State *s) noexcept nogil:
    cdef int n = s.n
    cdef int x, y, z, xy, xz, lhs, rhs
    cdef int *t = s.t
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            if xy < 0:
                continue
            for z in range(y + 1, n):
                xz = t[x * n + z]
                if xz < 0:
                    continue
                lhs = t[xy * n + z]
                rhs = t[xz * n + y]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    return True


cdef bint solid_ok(State *s) noexcept nogil:
    cdef int n = s.n
    cdef int x, y, z, xy, xz, lhs, rhs
    cdef int *t = s.t
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            if xy < 0 or t[xy] != 0:
                continue
            for z in range(n):
                xz = t[x * n + z]
                if xz < 0:
                    continue
                lhs = t[xy * n + z]
                rhs = t[xz * n + y]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    return True


cdef bint lexmin_ok(State *s) noexcept nogil:
    cdef int n = s.n
    cdef int nn = n * n
    cdef int p, k, tv, sv
    cdef int *perm
    cdef int *src
    for p in range(s.nperms):
        perm = s.perm + p * n
        src = s.src + p * nn
        for k in range(nn):
            tv = s.t[k]
            if tv < 0:
                break
            sv = s.t[src[k]]
            if sv < 0:
                break
            sv = perm[sv]
            if sv < tv:
                return False
            if sv > tv:
                break
    return True


cdef bint check(State *s, int k) noexcept nogil:
    cdef int n = s.n
    cdef int pos = s.cells[k]
    cdef int x = pos // n
    cdef int y = pos % n
    cdef int i
    cdef bint nonzero
    if s.t[pos] == 0 and s.t[y * n + x] == 0:
        return False
    if not axiom_one_ok(s):
        return False
    if s.f_bci and not bci_ok(s):
        return False
    if s.f_solid and not solid_ok(s):
        return False
    if s.row_end[k]:
        if s.f_not_bcc and x == 0:
            nonzero = False
            for i in range(1, n):
                if s.t[i] != 0:
                    nonzero = True
            if not nonzero:
                return False
        if s.nperms > 0 and not lexmin_ok(s):
            return False
    return True


cdef void rec(State *s, int k, list results, bint full) except *:
    cdef int pos, v, lo, hi, i
    if k == s.depth_limit:
        if full:
            results.append(tuple([s.t[i] for i in range(s.n * s.n)]))
        else:
            results.append(tuple([s.t[s.cells[i]] for i in range(k)]))
        return
    pos = s.cells[k]
    if k < s.nprefix:
        lo = s.prefix[k]
        hi = lo + 1
    elif s.f_bcc and pos < s.n:
        lo = 0
        hi = 1
    else:
        lo = 0
        hi = s.n
    for v in range(lo, hi):
        s.nodes += 1
        s.t[pos] = v
        if check(s, k):
            rec(s, k + 1, results, full)
    s.t[pos] = -1


def search(int n, int flags=LEXMIN, prefix=(), int stop_depth=-1):
    """Same contract as ``_pysearch.search``."""
    if n < 1 or n > MAXN:
        raise ValueError(f"compiled kernel supports orders 1..{MAXN}, got {n}")
    cdef State s
    cdef int i, j, k
    s.n = n
    for i in range(n * n):
        s.t[i] = -1
    for i in range(n):
        s.t[i * n] = i
        s.t[i * n + i] = 0
    cells = free_cells(n)
    s.ncells = len(cells)
    for k in range(s.ncells):
        s.cells[k] = cells[k]
        s.row_end[k] = k == s.ncells - 1 or cells[k + 1] // n != cells[k] // n
    s.depth_limit = s.ncells if stop_depth < 0 else min(stop_depth, s.ncells)
    if len(prefix) > s.ncells:
        raise ValueError("prefix longer than the number of free cells")
    s.nprefix = len(prefix)
    for k in range(s.nprefix):
        s.prefix[k] = prefix[k]
    s.f_bcc = (flags & BCC) != 0
    s.f_not_bcc = (flags & NOT_BCC) != 0
    s.f_bci = (flags & BCI) != 0
    s.f_solid = (flags & SOLID) != 0
    s.nodes = 0

    perms = relabel_sources(n) if flags & LEXMIN else []
    s.nperms = len(perms)
    s.perm = <int *> malloc(max(1, s.nperms * n) * sizeof(int))
    s.src = <int *> malloc(max(1, s.nperms * n * n) * sizeof(int))
    if s.perm == NULL or s.src == NULL:
        free(s.perm)
        free(s.src)
        raise MemoryError()
    results = []
    try:
        for i, (perm, src) in enumerate(perms):
            for j in range(n):
                s.perm[i * n + j] = perm[j]
            for j in range(n * n):
                s.src[i * n * n + j] = src[j]
        rec(&s, 0, results, stop_depth < 0)
    finally:
        free(s.perm)
        free(s.src)
    return results, s.nodes
