"""Natural order x <= y iff x*y = 0, minimal elements, initial parts and branches."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Mapping, Tuple

from .table import CayleyTable, InvariantViolation, require_weak_bcc

# Internal cross-checks (partition laws, branch criterion); disable for throughput.
CROSS_CHECKS = True


@dataclass(frozen=True)
class OrderRelation:
    n: int
    leq: Tuple[Tuple[bool, ...], ...]

    def __call__(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def strict_pairs(self) -> Tuple[Tuple[int, int], ...]:
        """All (x, y) with x <= y and x != y, row-major."""
        return tuple(
            (x, y) for x in range(self.n) for y in range(self.n) if x != y and self.leq[x][y]
        )


@lru_cache(maxsize=4096)
def derive_order(t: CayleyTable) -> OrderRelation:
    require_weak_bcc(t)
    n = t.n
    leq = tuple(tuple(t(x, y) == 0 for y in range(n)) for x in range(n))
    for x in range(n):
        if not leq[x][x]:
            raise InvariantViolation(f"order not reflexive at {x}")
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise InvariantViolation(f"order not antisymmetric at {(x, y)}")
            if not leq[x][y]:
                continue
            for z in range(n):
                if leq[y][z] and not leq[x][z]:
                    raise InvariantViolation(f"order not transitive at {(x, y, z)}")
    return OrderRelation(n, leq)


@lru_cache(maxsize=4096)
def minimal_elements(t: CayleyTable) -> FrozenSet[int]:
    require_weak_bcc(t)
    n = t.n
    return frozenset(a for a in range(n) if all(y == a or t(y, a) != 0 for y in range(n)))


@dataclass(frozen=True)
class BranchDecomposition:
    minimal: Tuple[int, ...]
    branch_of: Tuple[int, ...]
    branches: Mapping[int, FrozenSet[int]]

    def same(self, x: int, y: int) -> bool:
        return self.branch_of[x] == self.branch_of[y]

    def branch(self, x: int) -> FrozenSet[int]:
        """The branch containing x."""
        return self.branches[self.branch_of[x]]

    def same_branch_pairs(self) -> Tuple[Tuple[int, int], ...]:
        n = len(self.branch_of)
        return tuple((x, y) for x in range(n) for y in range(n) if self.same(x, y))


@lru_cache(maxsize=4096)
def branch_decomposition(t: CayleyTable) -> BranchDecomposition:
    minimal = tuple(sorted(minimal_elements(t)))
    n = t.n
    branches = {a: frozenset(x for x in range(n) if t(a, x) == 0) for a in minimal}
    branch_of = [-1] * n
    for a in minimal:
        for x in branches[a]:
            if branch_of[x] != -1:
                raise InvariantViolation(
                    f"branches B({branch_of[x]}) and B({a}) share element {x}"
                )
            branch_of[x] = a
    if -1 in branch_of:
        raise InvariantViolation(f"element {branch_of.index(-1)} lies in no branch")
    decomposition = BranchDecomposition(minimal, tuple(branch_of), branches)
    if CROSS_CHECKS:
        zero_branch = branches[0]
        for x in range(n):
            for y in range(n):
                if decomposition.same(x, y) != (t(x, y) in zero_branch):
                    raise InvariantViolation(
                        f"branch criterion x*y in B(0) disagrees at {(x, y)}"
                    )
    return decomposition


@dataclass(frozen=True)
class InitialPart:
    bound: int
    members: FrozenSet[int]


def initial_part(t: CayleyTable, b: int) -> InitialPart:
    require_weak_bcc(t)
    return InitialPart(b, frozenset(x for x in range(t.n) if t(x, b) == 0))


def same_branch(t: CayleyTable, x: int, y: int) -> bool:
    decomposition = branch_decomposition(t)
    same = decomposition.same(x, y)
    if CROSS_CHECKS and same != (t(x, y) in decomposition.branches[0]):
        raise InvariantViolation(f"branch criterion x*y in B(0) disagrees at {(x, y)}")
    return same
