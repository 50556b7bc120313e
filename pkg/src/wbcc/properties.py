"""Solidity, two-variable identities (global and branchwise) and branch meets."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .order import branch_decomposition, initial_part, same_branch
from .table import CayleyTable, Witness, require_weak_bcc, scan_order


class LawId(str, Enum):
    COMMUTATIVE = "commutative"
    POSITIVE_IMPLICATIVE = "positive_implicative"
    IMPLICATIVE = "implicative"
    PHI_IMPLICATIVE = "phi_implicative"
    BCI_POSITIVE_IMPLICATIVE = "bci_positive_implicative"

    def sides(self, t: CayleyTable, x: int, y: int) -> Tuple[int, int]:
        """Left and right hand side of the identity at (x, y)."""
        xy = t(x, y)
        if self is LawId.COMMUTATIVE:
            return t(x, xy), t(y, t(y, x))
        if self is LawId.POSITIVE_IMPLICATIVE:
            return t(xy, y), xy
        if self is LawId.IMPLICATIVE:
            return t(x, t(y, x)), x
        if self is LawId.PHI_IMPLICATIVE:
            return xy, t(xy, t(y, t(0, t(0, y))))
        return xy, t(t(xy, y), t(0, y))

    def holds_at(self, t: CayleyTable, x: int, y: int) -> bool:
        lhs, rhs = self.sides(t, x, y)
        return lhs == rhs


IDENTITY_TEXT = {
    LawId.COMMUTATIVE: "x*(x*y) = y*(y*x)",
    LawId.POSITIVE_IMPLICATIVE: "(x*y)*y = x*y",
    LawId.IMPLICATIVE: "x*(y*x) = x",
    LawId.PHI_IMPLICATIVE: "x*y = (x*y)*(y*phi^2(y))",
    LawId.BCI_POSITIVE_IMPLICATIVE: "x*y = ((x*y)*y)*(0*y)",
}


class Scope(str, Enum):
    GLOBAL = "global"
    BRANCHWISE = "branchwise"


class CrossBranchError(ValueError):
    """Branch meets are only defined for elements of one branch."""


@dataclass(frozen=True)
class IdentityResult:
    holds: bool
    witness: Optional[Witness] = None
    reason: str = field(default="", compare=False)


@dataclass(frozen=True)
class SolidityFlags:
    solid: bool
    right_solid: bool
    supersolid: bool
    solid_witness: Optional[Witness] = None
    right_solid_witness: Optional[Witness] = None


@lru_cache(maxsize=4096)
def solidity(t: CayleyTable) -> SolidityFlags:
    """(x*y)*z = (x*z)*y for same-branch x, y (solid) and same-branch y, z (right solid)."""
    require_weak_bcc(t)
    d = branch_decomposition(t)
    solid_w = right_w = None
    for x, y, z in scan_order(t.n, 3):
        if solid_w is not None and right_w is not None:
            break
        if t(t(x, y), z) == t(t(x, z), y):
            continue
        if solid_w is None and d.same(x, y):
            solid_w = (x, y, z)
        if right_w is None and d.same(y, z):
            right_w = (x, y, z)
    solid = solid_w is None
    right = right_w is None
    return SolidityFlags(solid, right, solid and right, solid_w, right_w)


@lru_cache(maxsize=16384)
def holds_identity(t: CayleyTable, law: LawId, scope: Scope = Scope.GLOBAL) -> IdentityResult:
    require_weak_bcc(t)
    law = LawId(law)
    branchwise = Scope(scope) is Scope.BRANCHWISE
    d = branch_decomposition(t)
    for x, y in scan_order(t.n, 2):
        if branchwise and not d.same(x, y):
            continue
        if not law.holds_at(t, x, y):
            lhs, rhs = law.sides(t, x, y)
            return IdentityResult(False, (x, y), f"{IDENTITY_TEXT[law]} gives {lhs} != {rhs}")
    return IdentityResult(True)


def identity_results(t: CayleyTable) -> Dict[Tuple[LawId, Scope], IdentityResult]:
    return {(law, scope): holds_identity(t, law, scope) for law in LawId for scope in Scope}


def branch_meet(t: CayleyTable, x: int, y: int) -> int:
    """x ^ y = y*(y*x), defined for x and y in one branch."""
    if not same_branch(t, x, y):
        raise CrossBranchError(f"{x} and {y} lie in different branches")
    return t(y, t(y, x))


@lru_cache(maxsize=4096)
def is_branch_semilattice(t: CayleyTable) -> IdentityResult:
    """Whether every branch is a meet-semilattice under x ^ y = y*(y*x).

    Checks closure, idempotence, commutativity, associativity and that x ^ y is
    the greatest lower bound of x and y.  Lower bounds are taken over the whole
    algebra; comparable elements share a branch, so they land in the branch.
    """
    require_weak_bcc(t)
    d = branch_decomposition(t)
    n = t.n

    def meet(x, y):
        return t(y, t(y, x))

    for x, y in scan_order(n, 2):
        if d.same(x, y) and not d.same(meet(x, y), x):
            return IdentityResult(False, (x, y), "meet leaves the branch")
    for x in range(n):
        if meet(x, x) != x:
            return IdentityResult(False, (x,), "meet not idempotent")
    for x, y in scan_order(n, 2):
        if not d.same(x, y):
            continue
        m = meet(x, y)
        if m != meet(y, x):
            return IdentityResult(False, (x, y), "meet not commutative")
        if t(m, x) != 0 or t(m, y) != 0:
            return IdentityResult(False, (x, y), "meet is not a lower bound")
        for z in range(n):
            if t(z, x) == 0 and t(z, y) == 0 and t(z, m) != 0:
                return IdentityResult(False, (x, y, z), "meet is not the greatest lower bound")
    for x, y, z in scan_order(n, 3):
        if d.same(x, y) and d.same(y, z) and meet(meet(x, y), z) != meet(x, meet(y, z)):
            return IdentityResult(False, (x, y, z), "meet not associative")
    return IdentityResult(True)


@lru_cache(maxsize=4096)
def initial_part_meet_law(t: CayleyTable) -> IdentityResult:
    """A(x) & A(y) == A(x ^ y) for every same-branch pair."""
    require_weak_bcc(t)
    d = branch_decomposition(t)
    parts = [initial_part(t, b).members for b in range(t.n)]
    for x, y in scan_order(t.n, 2):
        if d.same(x, y) and parts[x] & parts[y] != parts[t(y, t(y, x))]:
            return IdentityResult(False, (x, y), "A(x) & A(y) != A(x ^ y)")
    return IdentityResult(True)
