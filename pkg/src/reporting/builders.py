"""Conversion of search results, assignments and countermodels into report models"""

from typing import Dict, Mapping, Optional, Sequence

from ..fo_models.model_checker import Countermodel
from ..semantics.values import TruthValue
from ..syntax.canonical import canonicalize
from ..syntax.formulas import Formula
from ..syntax.operations import complexity
from ..syntax.printer import to_text
from ..tableau.engine import SearchResult
from ..tableau.prover import ProofVerdict
from ..tableau.signed import MarkedSignedFormula
from ..tableau.tree import TableauNode
from .models import AssignmentModel, CountermodelModel, ProofNodeModel, ProofReport, TableauModel


def canonical_text(formula: Formula) -> str:
    """Print the variant-class representative, so variants echo identically."""
    return to_text(canonicalize(formula))


def _values(values: Mapping[Formula, TruthValue]) -> Dict[str, str]:
    ordered = sorted(values.items(), key=lambda item: (complexity(item[0]), to_text(item[0])))
    return {to_text(formula): str(value) for formula, value in ordered}


def assignment_model(assignment: Mapping[Formula, TruthValue]) -> AssignmentModel:
    return AssignmentModel(values=_values(assignment))


def countermodel_model(countermodel: Countermodel) -> CountermodelModel:
    plain = countermodel.structure.to_dict()
    return CountermodelModel(
        domain=plain["domain"],
        predicates=plain["predicates"],
        constants=plain["constants"],
        valuation=_values(countermodel.valuation),
    )


def tableau_model(result: SearchResult) -> TableauModel:
    nodes = result.tableau.nodes()
    ids: Dict[int, int] = {id(node): index for index, node in enumerate(nodes)}
    return TableauModel(
        start=str(result.start),
        outcome=result.outcome.value,
        stages=result.stages,
        nodes=[_node_model(node, ids) for node in nodes],
    )


def _node_model(node: TableauNode, ids: Dict[int, int]) -> ProofNodeModel:
    expression = node.expression
    return ProofNodeModel(
        id=ids[id(node)],
        sign=str(expression.sign),
        formula=to_text(expression.sentence),
        mark=expression.mark if isinstance(expression, MarkedSignedFormula) else None,
        rule=node.rule,
        children=[ids[id(child)] for child in node.children],
        closed=node.closed,
        finished=node.finished,
    )


def proof_report(
    logic: str,
    first_order: bool,
    premises: Sequence[Formula],
    formula: Formula,
    verdict: ProofVerdict,
    assignment: Optional[Mapping[Formula, TruthValue]] = None,
    countermodel: Optional[Countermodel] = None,
) -> ProofReport:
    return ProofReport(
        logic=logic,
        first_order=first_order,
        premises=[canonical_text(p) for p in premises],
        formula=canonical_text(formula),
        target=canonical_text(verdict.target),
        status=verdict.status.value,
        tableaux=[tableau_model(result) for result in verdict.searches.values()],
        assignment=assignment_model(assignment) if assignment is not None else None,
        countermodel=countermodel_model(countermodel) if countermodel is not None else None,
    )
