"""Machine-checkable statements of the structural results on weak BCC-algebras.

Each law is evaluated exhaustively on a finite algebra.  Conditional laws first
test their hypothesis and report ``vacuous`` when it fails, so a census can
tell "holds" apart from "does not apply".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .properties import (
    LawId,
    Scope,
    holds_identity,
    initial_part_meet_law,
    is_branch_semilattice,
    solidity,
)
from .table import CayleyTable, Witness, classify, require_weak_bcc, scan_order


class Status(str, Enum):
    PASS = "pass"
    VACUOUS = "vacuous"
    FAIL = "fail"


class UnknownLawError(KeyError):
    pass


@dataclass(frozen=True)
class LawCheckResult:
    law_id: str
    status: Status
    witness: Optional[Witness] = None
    detail: str = ""


Check = Tuple[bool, Optional[Witness]]


def _first_violation(domain: Iterable[Witness], pred: Callable[..., bool]) -> Check:
    for w in domain:
        if not pred(*w):
            return False, w
    return True, None


def _minimal(t: CayleyTable) -> List[int]:
    return [a for a in range(t.n) if all(y == a or t(y, a) != 0 for y in range(t.n))]


def _same_branch_pairs(t: CayleyTable) -> List[Witness]:
    # x, y share a branch iff x*y lies above 0
    return [(x, y) for x, y in scan_order(t.n, 2) if t(0, t(x, y)) == 0]


def _result(law_id: str, check: Check, what: str) -> LawCheckResult:
    ok, w = check
    if ok:
        return LawCheckResult(law_id, Status.PASS)
    return LawCheckResult(law_id, Status.FAIL, w, f"{what} fails at {w}")


def _vacuous(law_id: str, why: str) -> LawCheckResult:
    return LawCheckResult(law_id, Status.VACUOUS, None, why)


def _equivalence(law_id: str, conditions: Sequence[Tuple[str, Check]]) -> LawCheckResult:
    for i, (p, (p_ok, p_w)) in enumerate(conditions):
        for q, (q_ok, q_w) in conditions[i + 1:]:
            if p_ok != q_ok:
                if p_ok:
                    detail = f"({p}) holds but ({q}) fails at {q_w}"
                    w = q_w
                else:
                    detail = f"({q}) holds but ({p}) fails at {p_w}"
                    w = p_w
                return LawCheckResult(law_id, Status.FAIL, w, detail)
    return LawCheckResult(law_id, Status.PASS)


def _identity(t: CayleyTable, law: LawId, scope: Scope) -> Check:
    r = holds_identity(t, law, scope)
    return r.holds, r.witness


# --- unconditional laws ---------------------------------------------------


def _branch_laws(t):
    law = "branch_laws"
    minimal = _minimal(t)
    n = t.n
    owners = [[a for a in minimal if t(a, x) == 0] for x in range(n)]
    for x in range(n):
        if len(owners[x]) != 1:
            return LawCheckResult(law, Status.FAIL, (x,), f"{x} lies in {len(owners[x])} branches")
    for a in minimal:
        if owners[a] != [a]:
            return LawCheckResult(law, Status.FAIL, (a,), f"{a} not in its own branch")
    zero_branch = {x for x in range(n) if t(0, x) == 0}
    return _result(
        law,
        _first_violation(
            scan_order(n, 2), lambda x, y: (owners[x] == owners[y]) == (t(x, y) in zero_branch)
        ),
        "same branch iff x*y in B(0)",
    )


def _monotonicity(t):
    def mono(x, y, z):
        if t(x, y) != 0:
            return True
        return t(t(x, z), t(y, z)) == 0 and t(t(z, y), t(z, x)) == 0

    return _result(
        "monotonicity_2_3",
        _first_violation(scan_order(t.n, 3), mono),
        "x<=y => x*z <= y*z and z*y <= z*x",
    )


def _phi_laws(t):
    def phi2(x):
        return t(0, t(0, x))

    ok = _first_violation(scan_order(t.n, 2), lambda x, y: phi2(t(x, y)) == t(phi2(x), phi2(y)))
    if not ok[0]:
        return _result("phi_laws", ok, "phi^2(x*y) = phi^2(x)*phi^2(y)")
    return _result(
        "phi_laws",
        _first_violation(((x,) for x in range(t.n)), lambda x: t(phi2(x), x) == 0),
        "phi^2(x) <= x",
    )


# --- laws for solid algebras ------------------------------------------------


def _solid_law(law_id: str, body: Callable[[CayleyTable], LawCheckResult]):
    def check(t):
        if not solidity(t).solid:
            return _vacuous(law_id, "algebra is not solid")
        return body(t)

    return check


def _lemma_3_2(t):
    return _result(
        "lemma_3_2",
        _first_violation(_same_branch_pairs(t), lambda x, y: t(t(x, t(x, y)), y) == 0),
        "x*(x*y) <= y",
    )


def _cor_3_3(t):
    def same(u, v):
        return t(0, t(u, v)) == 0

    return _result(
        "cor_3_3",
        _first_violation(
            _same_branch_pairs(t),
            lambda x, y: same(t(x, t(x, y)), x) and same(t(y, t(y, x)), x),
        ),
        "x*(x*y), y*(y*x) in the branch of x",
    )


def _cor_3_4(t):
    pairs = [(a, x) for a in _minimal(t) for x in range(t.n) if t(a, x) == 0]
    return _result(
        "cor_3_4", _first_violation(pairs, lambda a, x: t(x, t(x, a)) == a), "x*(x*a) = a"
    )


def _lemma_3_5(t):
    return _result(
        "lemma_3_5",
        _first_violation(_same_branch_pairs(t), lambda x, y: t(x, t(x, t(x, y))) == t(x, y)),
        "x*(x*(x*y)) = x*y",
    )


def _thm_3_6(t):
    pairs = _same_branch_pairs(t)
    below = [(x, y) for x, y in scan_order(t.n, 2) if t(x, y) == 0]
    return _equivalence(
        "thm_3_6_equivalence",
        [
            ("a", _identity(t, LawId.COMMUTATIVE, Scope.BRANCHWISE)),
            ("b", _first_violation(pairs, lambda x, y: t(x, y) == t(x, t(y, t(y, x))))),
            ("c", _first_violation(below, lambda x, y: x == t(y, t(y, x)))),
            (
                "d",
                _first_violation(
                    pairs, lambda x, y: t(x, t(x, y)) == t(y, t(y, t(x, t(x, y))))
                ),
            ),
        ],
    )


def _thm_3_7(t):
    semi = is_branch_semilattice(t)
    parts = initial_part_meet_law(t)
    return _equivalence(
        "thm_3_7_equivalence",
        [
            ("commutative", _identity(t, LawId.COMMUTATIVE, Scope.BRANCHWISE)),
            ("a", (semi.holds, semi.witness)),
            ("b", (parts.holds, parts.witness)),
        ],
    )


def _bw_implicative_law(law_id: str, body: Callable[[CayleyTable], LawCheckResult]):
    def check(t):
        if not holds_identity(t, LawId.IMPLICATIVE, Scope.BRANCHWISE).holds:
            return _vacuous(law_id, "algebra is not branchwise implicative")
        return body(t)

    return _solid_law(law_id, check)


def _thm_3_8(t):
    return _result(
        "thm_3_8",
        _identity(t, LawId.COMMUTATIVE, Scope.BRANCHWISE),
        "branchwise commutativity",
    )


def _thm_3_9(t):
    c = classify(t)
    comm = _identity(t, LawId.COMMUTATIVE, Scope.GLOBAL)
    if not c.is_bck:
        rhs: Check = (False, c.bcc_witness or c.bci_witness)
    else:
        rhs = comm
    return _equivalence(
        "thm_3_9",
        [
            ("branchwise positive implicative", _identity(t, LawId.POSITIVE_IMPLICATIVE, Scope.BRANCHWISE)),
            ("commutative BCK-algebra", rhs),
        ],
    )


# --- laws with other hypotheses ---------------------------------------------------


def _thm_3_10(t):
    if not classify(t).is_bck:
        return _vacuous("thm_3_10", "algebra is not a BCK-algebra")
    comm = _identity(t, LawId.COMMUTATIVE, Scope.GLOBAL)
    posimp = _identity(t, LawId.POSITIVE_IMPLICATIVE, Scope.GLOBAL)
    both = comm if not comm[0] else posimp
    return _equivalence(
        "thm_3_10",
        [
            ("implicative", _identity(t, LawId.IMPLICATIVE, Scope.GLOBAL)),
            ("commutative and positive implicative", both),
        ],
    )


def _solid_bcc_is_bck(t):
    c = classify(t)
    if not c.is_bcc:
        return _vacuous("solid_bcc_is_bck", "algebra is not a BCC-algebra")
    if not solidity(t).solid:
        return _vacuous("solid_bcc_is_bck", "algebra is not solid")
    if len(_minimal(t)) != 1:
        return LawCheckResult("solid_bcc_is_bck", Status.FAIL, tuple(_minimal(t)), "more than one branch")
    return _result("solid_bcc_is_bck", (c.is_bci, c.bci_witness), "(x*y)*z = (x*z)*y")


def _posimp_one_branch(t):
    law = "posimp_one_branch"
    if not holds_identity(t, LawId.POSITIVE_IMPLICATIVE, Scope.GLOBAL).holds:
        return _vacuous(law, "algebra is not positive implicative")
    c = classify(t)
    if len(_minimal(t)) != 1:
        return LawCheckResult(law, Status.FAIL, tuple(_minimal(t)), "more than one branch")
    return _result(law, (c.is_bcc, c.bcc_witness), "0*x = 0")


def _bck_posimp_phi(t):
    law = "bck_posimp_iff_phi_implicative"
    if not classify(t).is_bck:
        return _vacuous(law, "algebra is not a BCK-algebra")
    return _equivalence(
        law,
        [
            ("positive implicative", _identity(t, LawId.POSITIVE_IMPLICATIVE, Scope.GLOBAL)),
            ("phi-implicative", _identity(t, LawId.PHI_IMPLICATIVE, Scope.GLOBAL)),
        ],
    )


@dataclass(frozen=True)
class Law:
    law_id: str
    statement: str
    check: Callable[[CayleyTable], LawCheckResult]


_REGISTRY = (
    Law("lemma_3_2", "solid: x*(x*y) <= y for x, y in one branch", _solid_law("lemma_3_2", _lemma_3_2)),
    Law("cor_3_3", "solid: x, y in B(a) => x*(x*y), y*(y*x) in B(a)", _solid_law("cor_3_3", _cor_3_3)),
    Law("cor_3_4", "solid: a minimal, x in B(a) => x*(x*a) = a", _solid_law("cor_3_4", _cor_3_4)),
    Law("lemma_3_5", "solid: x*(x*(x*y)) = x*y for x, y in one branch", _solid_law("lemma_3_5", _lemma_3_5)),
    Law(
        "thm_3_6_equivalence",
        "solid: branchwise commutative <=> x*y = x*(y*(y*x)) <=> x = y*(y*x) for x<=y"
        " <=> x*(x*y) = y*(y*(x*(x*y)))",
        _solid_law("thm_3_6_equivalence", _thm_3_6),
    ),
    Law(
        "thm_3_7_equivalence",
        "solid: branchwise commutative <=> branches are semilattices under y*(y*x)"
        " <=> A(x) & A(y) = A(x ^ y)",
        _solid_law("thm_3_7_equivalence", _thm_3_7),
    ),
    Law(
        "thm_3_8",
        "solid and branchwise implicative => branchwise commutative",
        _bw_implicative_law("thm_3_8", _thm_3_8),
    ),
    Law(
        "thm_3_9",
        "solid and branchwise implicative: branchwise positive implicative"
        " <=> commutative BCK-algebra",
        _bw_implicative_law("thm_3_9", _thm_3_9),
    ),
    Law("thm_3_10", "BCK: implicative <=> commutative and positive implicative", _thm_3_10),
    Law("monotonicity_2_3", "x <= y => x*z <= y*z and z*y <= z*x", _monotonicity),
    Law("phi_laws", "phi^2 is an endomorphism and phi^2(x) <= x", _phi_laws),
    Law("branch_laws", "branches partition X; same branch iff x*y in B(0)", _branch_laws),
    Law("solid_bcc_is_bck", "a solid BCC-algebra is a BCK-algebra", _solid_bcc_is_bck),
    Law("posimp_one_branch", "(x*y)*y = x*y forces a single branch and 0*x = 0", _posimp_one_branch),
    Law(
        "bck_posimp_iff_phi_implicative",
        "BCK: positive implicative <=> phi-implicative",
        _bck_posimp_phi,
    ),
)
LAWS = {law.law_id: law for law in _REGISTRY}


def list_laws() -> Tuple[str, ...]:
    return tuple(LAWS)


def verify(t: CayleyTable, law_id: str) -> LawCheckResult:
    try:
        law = LAWS[law_id]
    except KeyError:
        raise UnknownLawError(law_id) from None
    require_weak_bcc(t)
    return law.check(t)


def verify_all(t: CayleyTable) -> List[LawCheckResult]:
    require_weak_bcc(t)
    return [law.check(t) for law in _REGISTRY]
