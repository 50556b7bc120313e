"""Full analysis of one table as a nested dict, rendered as JSON or text.

The text form lists one fact per line as ``dotted.key = <json value>`` under
section headers, so both renderings carry the same facts and either can be
parsed back into the same tree.
"""

from __future__ import annotations

import json
from typing import Any, Dict

from .laws import verify_all
from .order import branch_decomposition, derive_order
from .properties import LawId, Scope, holds_identity, solidity
from .table import AXIOMS, CayleyTable, check_axioms, classify


def _w(witness):
    return None if witness is None else list(witness)


def _identity_entry(t, law, scope):
    r = holds_identity(t, law, scope)
    return {"holds": r.holds, "witness": _w(r.witness)}


def build_report(t: CayleyTable) -> Dict[str, Any]:
    axioms = check_axioms(t)
    c = classify(t)
    report: Dict[str, Any] = {
        "order": t.n,
        "axioms": {
            a: {"holds": axioms.holds[a], "witness": _w(axioms.witness[a])} for a in AXIOMS
        },
        "classification": dict(
            c.flags(), bcc_witness=_w(c.bcc_witness), bci_witness=_w(c.bci_witness)
        ),
    }
    if not axioms.ok:
        return report
    order = derive_order(t)
    d = branch_decomposition(t)
    s = solidity(t)
    report["order_relation"] = {"strict_pairs": [list(p) for p in order.strict_pairs()]}
    report["minimal_elements"] = list(d.minimal)
    report["branches"] = {str(a): sorted(d.branches[a]) for a in d.minimal}
    report["solidity"] = {
        "solid": s.solid,
        "right_solid": s.right_solid,
        "supersolid": s.supersolid,
        "solid_witness": _w(s.solid_witness),
        "right_solid_witness": _w(s.right_solid_witness),
    }
    report["identities"] = {
        law.value: {scope.value: _identity_entry(t, law, scope) for scope in Scope}
        for law in LawId
    }
    report["laws"] = {
        r.law_id: {"status": r.status.value, "witness": _w(r.witness), "detail": r.detail}
        for r in verify_all(t)
    }
    return report


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2) + "\n"


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    else:
        out.append((prefix, value))


def render_text(report: Dict[str, Any]) -> str:
    lines = []
    for section, value in report.items():
        if isinstance(value, dict):
            lines.append(f"[{section}]")
        flat = []
        _flatten(section, value, flat)
        lines += [f"{key} = {json.dumps(v)}" for key, v in flat]
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> Dict[str, Any]:
    """Inverse of :func:`render_text`."""
    tree: Dict[str, Any] = {}
    for line in text.splitlines():
        if not line or line.startswith("["):
            continue
        key, _, value = line.partition(" = ")
        node = tree
        parts = key.split(".")
        for p in parts[:-1]:
            node = node.setdefault(p, {})
        node[parts[-1]] = json.loads(value)
    return tree
