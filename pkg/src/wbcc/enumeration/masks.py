"""Property bitmask stored with every catalog entry (bit 0 is the LSB)."""

from typing import Dict

from ..properties import LawId, Scope, holds_identity, solidity
from ..table import CayleyTable, classify

MASK_BITS = (
    "is_bcc",
    "is_bci",
    "is_bck",
    "proper_weak",
    "solid",
    "right_solid",
    "supersolid",
    "bw_commutative",
    "bw_positive_implicative",
    "bw_implicative",
    "bw_phi_implicative",
    "phi_implicative_global",
)


def property_flags(t: CayleyTable) -> Dict[str, bool]:
    c = classify(t)
    s = solidity(t)
    bw = Scope.BRANCHWISE
    return {
        "is_bcc": c.is_bcc,
        "is_bci": c.is_bci,
        "is_bck": c.is_bck,
        "proper_weak": c.is_proper_weak,
        "solid": s.solid,
        "right_solid": s.right_solid,
        "supersolid": s.supersolid,
        "bw_commutative": holds_identity(t, LawId.COMMUTATIVE, bw).holds,
        "bw_positive_implicative": holds_identity(t, LawId.POSITIVE_IMPLICATIVE, bw).holds,
        "bw_implicative": holds_identity(t, LawId.IMPLICATIVE, bw).holds,
        "bw_phi_implicative": holds_identity(t, LawId.PHI_IMPLICATIVE, bw).holds,
        "phi_implicative_global": holds_identity(t, LawId.PHI_IMPLICATIVE, Scope.GLOBAL).holds,
    }


def property_mask(t: CayleyTable) -> int:
    flags = property_flags(t)
    return sum(1 << bit for bit, name in enumerate(MASK_BITS) if flags[name])
