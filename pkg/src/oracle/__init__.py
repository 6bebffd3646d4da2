"""Brute-force semantic decision procedure for the propositional logics"""

from .propositional import (
    LocalAssignment,
    OracleVerdict,
    consequence_prop,
    is_legal_assignment,
    is_valid_prop,
    legal_assignments,
    subformula_closure,
)

__all__ = [
    "LocalAssignment",
    "OracleVerdict",
    "consequence_prop",
    "is_legal_assignment",
    "is_valid_prop",
    "legal_assignments",
    "subformula_closure",
]
