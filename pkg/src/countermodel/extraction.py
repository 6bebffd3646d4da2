"""
Countermodels read off open finished branches.

Signs on the branch become values. Everything the branch leaves open is completed in
ascending complexity (ties broken by printed form): atoms default to T and compound
sentences take the first legal value in T, t, f, F order.
"""

from itertools import product
from typing import Dict, List, Optional, Sequence

import structlog

from ..common.exceptions import BranchNotFinishedError, CountermodelError
from ..fo_models.model_checker import (
    CLAUSE_DESIGNATED,
    Countermodel,
    FOValuation,
    find_violation,
    instantiation_closure,
    sentence_children,
)
from ..fo_models.structures import FourValuedStructure
from ..oracle.propositional import LocalAssignment, is_legal_assignment, subformula_closure
from ..semantics.nmatrix import allowed_values, forall_op
from ..semantics.values import TruthValue, ValueSet
from ..syntax.formulas import Atom, Const, Forall, Formula, PropAtom
from ..syntax.operations import complexity, is_propositional, predicates_of
from ..syntax.printer import to_text
from ..tableau.signed import SignedFormula
from ..tableau.tree import Branch

logger = structlog.get_logger(__name__)

DEFAULT_ELEMENT = "u1"


def _extension_order(nodes: Sequence[Formula]) -> List[Formula]:
    return sorted(nodes, key=lambda node: (complexity(node), to_text(node)))


def _root(branch: Branch) -> SignedFormula:
    root = branch.root.expression
    if not isinstance(root, SignedFormula):
        raise CountermodelError("branch root must be a signed formula")
    return root


def _branch_value(branch: Branch, sentence: Formula) -> Optional[TruthValue]:
    signs = branch.signs_of(sentence)
    if len(signs) > 1:
        raise CountermodelError(f"{to_text(sentence)} carries several signs")
    return next(iter(signs), None)


def _require_finished(branch: Branch) -> None:
    if branch.closed:
        raise BranchNotFinishedError("branch is closed")
    if not branch.is_finished():
        raise BranchNotFinishedError("branch still has expressions to expand")


def extract_prop_countermodel(branch: Branch) -> LocalAssignment:
    """
    Local assignment over the root's subformulas that makes every signed formula true.

    Raises:
        BranchNotFinishedError: If the branch is closed or not saturated.
        CountermodelError: If the read-off values are not a legal assignment.
    """
    _require_finished(branch)
    root = _root(branch)
    if not is_propositional(root.sentence):
        raise CountermodelError("propositional extraction needs a propositional branch")

    assignment: LocalAssignment = {}
    for node in _extension_order(subformula_closure([root.sentence])):
        signed = _branch_value(branch, node)
        if signed is not None:
            assignment[node] = signed
        elif isinstance(node, PropAtom):
            assignment[node] = TruthValue.T
        else:
            assignment[node] = next(iter(allowed_values(branch.logic, node, assignment.__getitem__)))

    if not is_legal_assignment(branch.logic, assignment):
        raise CountermodelError("branch signs do not form a legal assignment")
    logger.debug("Propositional countermodel extracted", size=len(assignment))
    return assignment


def extract_fo_countermodel(
    branch: Branch, constants: Optional[Sequence[str]] = None
) -> Countermodel:
    """
    Structure and valuation built from an open finished first-order branch.

    The domain is the branch's constants (``constants`` when given), each denoting itself.
    Predicate cells take the sign of the matching atom on the branch, else T.

    Raises:
        BranchNotFinishedError: If the branch is closed or not finished.
        CountermodelError: If the result fails the valuation clauses.
    """
    _require_finished(branch)
    root = _root(branch)
    universe = list(constants) if constants is not None else branch.universe()

    arities = dict(sorted(predicates_of(root.sentence).items()))
    domain = tuple(universe) if universe else (DEFAULT_ELEMENT,)
    tables: Dict[str, Dict[tuple, TruthValue]] = {}
    for name, arity in arities.items():
        table = {}
        for cell in product(domain, repeat=arity):
            if universe:
                atom = Atom(name, tuple(Const(element) for element in cell))
                table[cell] = _branch_value(branch, atom) or TruthValue.T
            else:
                table[cell] = TruthValue.T
        tables[name] = table
    structure = FourValuedStructure(
        domain, tables, {name: name for name in universe}, arities
    )

    names = structure.names()
    valuation: FOValuation = {}
    for node in _extension_order(instantiation_closure(root.sentence, names)):
        if isinstance(node, Atom):
            forced = ValueSet.of(structure.atom_value(node))
        elif isinstance(node, Forall):
            children = sentence_children(node, names)
            forced = ValueSet.of(forall_op(ValueSet.from_values(valuation[c] for c in children)))
        else:
            forced = allowed_values(branch.logic, node, valuation.__getitem__)
        signed = _branch_value(branch, node)
        if signed is not None and signed not in forced:
            raise CountermodelError(
                f"{signed}:{to_text(node)} cannot hold, allowed values are {forced}"
            )
        valuation[node] = signed if signed is not None else next(iter(forced))

    violation = find_violation(branch.logic, structure, valuation, root.sentence)
    if violation is not None and not (
        violation.clause == CLAUSE_DESIGNATED and root.sign.designated
    ):
        raise CountermodelError(
            f"clause {violation.clause} fails at {to_text(violation.sentence)}: {violation.detail}"
        )
    logger.debug(
        "First-order countermodel extracted",
        domain=list(structure.domain),
        sentences=len(valuation),
    )
    return Countermodel(structure, valuation)
