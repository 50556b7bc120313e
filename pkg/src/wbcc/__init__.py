"""Finite weak BCC-algebras: axioms, branches, solidity, identities and census."""

from .laws import LawCheckResult, Status, list_laws, verify, verify_all
from .order import (
    BranchDecomposition,
    InitialPart,
    OrderRelation,
    branch_decomposition,
    derive_order,
    initial_part,
    minimal_elements,
    same_branch,
)
from .properties import (
    CrossBranchError,
    IdentityResult,
    LawId,
    Scope,
    SolidityFlags,
    branch_meet,
    holds_identity,
    initial_part_meet_law,
    is_branch_semilattice,
    solidity,
)
from .table import (
    AxiomReport,
    CayleyTable,
    Classification,
    InvariantViolation,
    NotWeakBCCError,
    TableError,
    check_axioms,
    classify,
    phi,
    phi_square,
)

__version__ = "0.1.0"
