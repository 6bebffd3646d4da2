"""
Legal-valuation enumeration over the subformula DAG.

A valuation restricted to the subformulas of finitely many formulas is legal exactly when
every compound node's value lies in its multioperator output, so enumerating these local
assignments decides validity and finite consequence.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence

import structlog

from ..common.config import settings
from ..common.exceptions import ResourceCapExceededError
from ..semantics.nmatrix import allowed_values
from ..semantics.values import VALUE_ORDER, LogicId, TruthValue
from ..syntax.formulas import Box, Formula, Imp, Neg, PropAtom
from ..syntax.operations import immediate_subformulas, is_propositional, subformulas

logger = structlog.get_logger(__name__)

LocalAssignment = Dict[Formula, TruthValue]


@dataclass
class OracleVerdict:
    """Validity verdict with the first counter-assignment in enumeration order."""

    valid: bool
    counter_assignment: Optional[LocalAssignment] = None
    assignments_checked: int = 0

    def __bool__(self) -> bool:
        return self.valid


def subformula_closure(roots: Sequence[Formula]) -> List[Formula]:
    """Distinct subformulas of ``roots``, every node after its immediate subformulas."""
    ordered: Dict[Formula, None] = {}
    for root in roots:
        for node in subformulas(root):
            ordered.setdefault(node, None)
    return list(ordered)


def legal_assignments(
    logic: LogicId, roots: Sequence[Formula], node_cap: Optional[int] = None
) -> Iterator[LocalAssignment]:
    """
    Stream every legal assignment over the subformula closure of ``roots``.

    Nodes are valued in closure order; each node tries its candidate values in the order
    T, t, f, F before backtracking.

    Raises:
        ValueError: If a root is not propositional.
        ResourceCapExceededError: If the closure has more nodes than the cap allows.
    """
    logic = LogicId(logic)
    for root in roots:
        if not is_propositional(root):
            raise ValueError("the oracle only accepts propositional formulas")
    nodes = subformula_closure(roots)
    cap = node_cap if node_cap is not None else settings.oracle_node_cap
    if len(nodes) > cap:
        raise ResourceCapExceededError(
            f"{len(nodes)} distinct subformulas exceed the oracle cap of {cap}"
        )
    return _enumerate(logic, nodes)


def _enumerate(logic: LogicId, nodes: List[Formula]) -> Iterator[LocalAssignment]:
    assignment: LocalAssignment = {}

    def extend(index: int) -> Iterator[LocalAssignment]:
        if index == len(nodes):
            yield dict(assignment)
            return
        node = nodes[index]
        if isinstance(node, PropAtom):
            options = VALUE_ORDER
        else:
            options = tuple(allowed_values(logic, node, assignment.__getitem__))
        for value in options:
            assignment[node] = value
            yield from extend(index + 1)
        del assignment[node]

    return extend(0)


def is_valid_prop(logic: LogicId, formula: Formula, node_cap: Optional[int] = None) -> OracleVerdict:
    """Decide whether every legal assignment designates ``formula``."""
    checked = 0
    for assignment in legal_assignments(logic, [formula], node_cap):
        checked += 1
        if not assignment[formula].designated:
            logger.debug("Counter-assignment found", logic=str(logic), checked=checked)
            return OracleVerdict(False, assignment, checked)
    logger.debug("Formula valid", logic=str(logic), checked=checked)
    return OracleVerdict(True, None, checked)


def consequence_prop(
    logic: LogicId,
    premises: Sequence[Formula],
    formula: Formula,
    node_cap: Optional[int] = None,
) -> bool:
    """True iff every legal assignment designating all ``premises`` designates ``formula``."""
    for assignment in legal_assignments(logic, list(premises) + [formula], node_cap):
        if all(assignment[p].designated for p in premises) and not assignment[formula].designated:
            return False
    return True


def is_legal_assignment(logic: LogicId, assignment: LocalAssignment) -> bool:
    """Check the local constraint of every ¬, □ and → node whose subformulas are valued."""
    logic = LogicId(logic)
    for node, value in assignment.items():
        if not isinstance(node, (Neg, Box, Imp)):
            continue
        if not all(child in assignment for child in immediate_subformulas(node)):
            continue
        if value not in allowed_values(logic, node, assignment.__getitem__):
            return False
    return True
