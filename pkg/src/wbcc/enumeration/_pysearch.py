"""Pure-Python backtracking kernel.

Reference implementation of the search; the compiled kernel in
``_ckernel.pyx`` follows it line by line and must produce identical output.

The table is a flat row-major list with -1 for unassigned cells.  The
diagonal (x*x = 0) and column 0 (x*0 = x) are seeded, the remaining cells are
filled in row-major order.  After every assignment the partial table is
checked against every constraint whose evaluation is fully determined.
"""

from itertools import permutations

from ._flags import BCC, BCI, LEXMIN, NOT_BCC, SOLID


def free_cells(n):
    """Row-major positions of the cells not forced by x*x = 0 and x*0 = x."""
    return [x * n + y for x in range(n) for y in range(1, n) if x != y]


def seed_table(n):
    t = [-1] * (n * n)
    for x in range(n):
        t[x * n] = x
        t[x * n + x] = 0
    return t


def relabel_sources(n):
    """For every non-identity permutation fixing 0: (perm, src).

    The relabeled table s satisfies s[k] = perm[t[src[k]]].
    """
    out = []
    for tail in permutations(range(1, n)):
        perm = (0,) + tail
        if perm == tuple(range(n)):
            continue
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        src = [inv[k // n] * n + inv[k % n] for k in range(n * n)]
        out.append((perm, src))
    return out


def _axiom_one_ok(t, n):
    for x in range(n):
        xn = x * n
        for y in range(n):
            a = t[xn + y]
            if a < 0:
                continue
            an = a * n
            for z in range(n):
                b = t[z * n + y]
                d = t[xn + z]
                if b < 0 or d < 0:
                    continue
                c = t[an + b]
                if c < 0:
                    continue
                if t[c * n + d] > 0:
                    return False
    return True


def _bci_ok(t, n):
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = t[xn + y]
            if xy < 0:
                continue
            for z in range(y + 1, n):
                xz = t[xn + z]
                if xz < 0:
                    continue
                lhs = t[xy * n + z]
                rhs = t[xz * n + y]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    return True


def _solid_ok(t, n):
    # x, y share a branch iff 0*(x*y) = 0
    for x in range(n):
        xn = x * n
        for y in range(n):
            xy = t[xn + y]
            if xy < 0 or t[xy] != 0:
                continue
            for z in range(n):
                xz = t[xn + z]
                if xz < 0:
                    continue
                lhs = t[xy * n + z]
                rhs = t[xz * n + y]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    return True


def _lexmin_ok(t, perms):
    for perm, src in perms:
        for k, tv in enumerate(t):
            if tv < 0:
                break
            sv = t[src[k]]
            if sv < 0:
                break
            sv = perm[sv]
            if sv < tv:
                return False
            if sv > tv:
                break
    return True


def search(n, flags=LEXMIN, prefix=(), stop_depth=-1):
    """Depth-first search over the free cells.

    Returns ``(results, nodes)``.  With ``stop_depth < 0`` the results are
    complete flat tables; otherwise they are the value tuples of the first
    ``stop_depth`` free cells that survive every check (used to split the
    tree between workers).  ``prefix`` pins the first free cells.
    """
    t = seed_table(n)
    cells = free_cells(n)
    ncells = len(cells)
    row_end = [k == ncells - 1 or cells[k + 1] // n != cells[k] // n for k in range(ncells)]
    perms = relabel_sources(n) if flags & LEXMIN else []
    depth_limit = ncells if stop_depth < 0 else min(stop_depth, ncells)
    results = []
    nodes = 0

    def check(k):
        pos = cells[k]
        x, y = divmod(pos, n)
        if t[pos] == 0 and t[y * n + x] == 0:
            return False
        if not _axiom_one_ok(t, n):
            return False
        if flags & BCI and not _bci_ok(t, n):
            return False
        if flags & SOLID and not _solid_ok(t, n):
            return False
        if row_end[k]:
            if flags & NOT_BCC and x == 0 and not any(t[1:n]):
                return False
            if perms and not _lexmin_ok(t, perms):
                return False
        return True

    def rec(k):
        nonlocal nodes
        if k == depth_limit:
            if stop_depth < 0:
                results.append(tuple(t))
            else:
                results.append(tuple(t[c] for c in cells[:k]))
            return
        pos = cells[k]
        if k < len(prefix):
            values = (prefix[k],)
        elif flags & BCC and pos < n:
            values = (0,)
        else:
            values = range(n)
        for v in values:
            nodes += 1
            t[pos] = v
            if check(k):
                rec(k + 1)
        t[pos] = -1

    rec(0)
    return results, nodes
