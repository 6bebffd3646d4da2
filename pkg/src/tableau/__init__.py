"""Signed tableaux for Tm, S4m, S5m and their first-order extensions"""

from .engine import Outcome, SearchResult, Tableau, run_systematic, saturate_prop
from .prover import ProofVerdict, VerdictStatus, nest_premises, prove, prove_from
from .rules import BOX_RULES, IMP_RULES, RuleApplication, expand
from .signed import Expression, MarkedSignedFormula, SignedFormula, instance
from .tree import Branch, TableauNode, is_branch_closed

__all__ = [
    "BOX_RULES",
    "Branch",
    "Expression",
    "IMP_RULES",
    "MarkedSignedFormula",
    "Outcome",
    "ProofVerdict",
    "RuleApplication",
    "SearchResult",
    "SignedFormula",
    "Tableau",
    "TableauNode",
    "VerdictStatus",
    "expand",
    "instance",
    "is_branch_closed",
    "nest_premises",
    "prove",
    "prove_from",
    "run_systematic",
    "saturate_prop",
]
