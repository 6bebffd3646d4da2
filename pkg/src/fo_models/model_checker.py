"""
Valuations over instantiation closures, countermodel verification and bounded search.

Valuations are keyed on canonical sentences, so variants share a value by construction.
Atomic and universally quantified sentences have forced values; only box and implication
nodes branch during enumeration.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import structlog

from ..common.config import settings
from ..common.exceptions import ResourceCapExceededError
from ..semantics.nmatrix import allowed_values, forall_op
from ..semantics.values import VALUE_ORDER, LogicId, TruthValue, ValueSet
from ..syntax.canonical import canonicalize
from ..syntax.formulas import Atom, Box, Const, Forall, Formula, Imp, Neg
from ..syntax.operations import (
    constants_of,
    immediate_subformulas,
    is_sentence,
    predicates_of,
    substitute,
)
from ..syntax.printer import to_text
from .structures import FourValuedStructure

logger = structlog.get_logger(__name__)

FOValuation = Dict[Formula, TruthValue]

CLAUSE_MISSING = 0
CLAUSE_ATOMIC = 1
CLAUSE_NEGATION = 2
CLAUSE_BOX = 3
CLAUSE_IMPLICATION = 4
CLAUSE_FORALL = 5
CLAUSE_DESIGNATED = -1

_CLAUSE_OF = {Neg: CLAUSE_NEGATION, Box: CLAUSE_BOX, Imp: CLAUSE_IMPLICATION}


@dataclass(frozen=True)
class ValidUpTo:
    """No countermodel with at most ``domain_size`` elements."""

    domain_size: int


@dataclass
class Countermodel:
    structure: FourValuedStructure
    valuation: FOValuation


@dataclass(frozen=True)
class ClauseViolation:
    clause: int
    sentence: Formula
    detail: str


def sentence_children(sentence: Formula, constants: Sequence[str]) -> Tuple[Formula, ...]:
    """Immediate subsentences; a universal sentence's children are its constant instances."""
    if isinstance(sentence, Forall):
        if not constants:
            raise ValueError("Quantified sentences need at least one constant to instantiate")
        return tuple(
            canonicalize(substitute(sentence.body, sentence.var, Const(name))) for name in constants
        )
    return immediate_subformulas(sentence)


def _closure_graph(sentence: Formula, constants: Sequence[str]) -> Dict[Formula, Tuple[Formula, ...]]:
    graph: Dict[Formula, Tuple[Formula, ...]] = {}

    def visit(node: Formula) -> None:
        if node in graph:
            return
        children = sentence_children(node, constants)
        for child in children:
            visit(child)
        graph[node] = children

    visit(canonicalize(sentence))
    return graph


def instantiation_closure(sentence: Formula, constants: Sequence[str]) -> List[Formula]:
    """
    Least set containing the canonical sentence, closed under subsentences and instances.

    The list is ordered so that every sentence follows the sentences its value depends on.
    """
    if not is_sentence(sentence):
        raise ValueError(f"{to_text(sentence)} is not a sentence")
    return list(_closure_graph(sentence, constants))


def legal_fo_valuations(
    logic: LogicId, structure: FourValuedStructure, sentence: Formula
) -> Iterator[FOValuation]:
    """Stream every legal valuation of ``structure`` over the instantiation closure."""
    logic = LogicId(logic)
    graph = _closure_graph(sentence, structure.names())
    nodes = list(graph)
    valuation: FOValuation = {}

    def extend(index: int) -> Iterator[FOValuation]:
        if index == len(nodes):
            yield dict(valuation)
            return
        node = nodes[index]
        if isinstance(node, Atom):
            options: Tuple[TruthValue, ...] = (structure.atom_value(node),)
        elif isinstance(node, Forall):
            options = (forall_op(ValueSet.from_values(valuation[c] for c in graph[node])),)
        else:
            options = tuple(allowed_values(logic, node, valuation.__getitem__))
        for value in options:
            valuation[node] = value
            yield from extend(index + 1)
        del valuation[node]

    return extend(0)


def find_violation(
    logic: LogicId, structure: FourValuedStructure, valuation: FOValuation, sentence: Formula
) -> Optional[ClauseViolation]:
    """
    Return the first valuation clause the candidate countermodel breaks, if any.

    Clauses: 0 missing sentence, 1 atomic, 2 negation, 3 box, 4 implication,
    5 universal quantifier, -1 the sentence is designated.
    """
    logic = LogicId(logic)
    graph = _closure_graph(sentence, structure.names())
    for node in graph:
        if node not in valuation:
            return ClauseViolation(CLAUSE_MISSING, node, "sentence has no value")
    for node, children in graph.items():
        value = valuation[node]
        if isinstance(node, Atom):
            expected = structure.atom_value(node)
            if value != expected:
                return ClauseViolation(CLAUSE_ATOMIC, node, f"expected {expected}, got {value}")
        elif isinstance(node, Forall):
            expected = forall_op(ValueSet.from_values(valuation[c] for c in children))
            if value != expected:
                return ClauseViolation(CLAUSE_FORALL, node, f"expected {expected}, got {value}")
        else:
            allowed = allowed_values(logic, node, valuation.__getitem__)
            if value not in allowed:
                clause = _CLAUSE_OF[type(node)]
                return ClauseViolation(clause, node, f"{value} not in {allowed}")
    root = canonicalize(sentence)
    if valuation[root].designated:
        return ClauseViolation(CLAUSE_DESIGNATED, root, f"value {valuation[root]} is designated")
    return None


def verify_countermodel(
    logic: LogicId, structure: FourValuedStructure, valuation: FOValuation, sentence: Formula
) -> bool:
    """True iff the valuation is legal for the structure and leaves ``sentence`` undesignated."""
    violation = find_violation(logic, structure, valuation, sentence)
    if violation is not None:
        logger.info(
            "Countermodel rejected",
            clause=violation.clause,
            sentence=to_text(violation.sentence),
            detail=violation.detail,
        )
    return violation is None


def _cells(sentence: Formula, domain: Tuple[str, ...]) -> List[Tuple[str, Tuple[str, ...]]]:
    return [
        (name, cell)
        for name, arity in sorted(predicates_of(sentence).items())
        for cell in product(domain, repeat=arity)
    ]


def count_structures(sentence: Formula, size: int) -> int:
    domain = tuple(f"u{i}" for i in range(1, size + 1))
    return len(VALUE_ORDER) ** len(_cells(sentence, domain)) * size ** len(constants_of(sentence))


def enumerate_structures(sentence: Formula, size: int) -> Iterator[FourValuedStructure]:
    """
    All structures of the given size for the symbols of ``sentence``.

    Predicate tables vary in lexicographic T, t, f, F order (predicates by name, cells in
    lexicographic tuple order); constant maps vary lexicographically inside each table.
    """
    domain = tuple(f"u{i}" for i in range(1, size + 1))
    arities = dict(sorted(predicates_of(sentence).items()))
    constants = constants_of(sentence)
    cells = _cells(sentence, domain)
    for values in product(VALUE_ORDER, repeat=len(cells)):
        tables: Dict[str, Dict[Tuple[str, ...], TruthValue]] = {name: {} for name in arities}
        for (name, cell), value in zip(cells, values):
            tables[name][cell] = value
        for images in product(domain, repeat=len(constants)):
            yield FourValuedStructure(domain, tables, dict(zip(constants, images)), arities)


def bounded_validity(
    logic: LogicId,
    sentence: Formula,
    max_domain: Optional[int] = None,
    structure_cap: Optional[int] = None,
) -> Union[ValidUpTo, Countermodel]:
    """
    Search every structure with at most ``max_domain`` elements for a countermodel.

    Returns:
        The first countermodel in enumeration order, else ``ValidUpTo(max_domain)``.

    Raises:
        ResourceCapExceededError: If the number of structures to visit exceeds the cap.
    """
    logic = LogicId(logic)
    max_domain = max_domain if max_domain is not None else settings.max_domain
    cap = structure_cap if structure_cap is not None else settings.structure_cap
    if max_domain < 1:
        raise ValueError("max_domain must be at least 1")
    if not is_sentence(sentence):
        raise ValueError(f"{to_text(sentence)} is not a sentence")
    total = sum(count_structures(sentence, size) for size in range(1, max_domain + 1))
    if total > cap:
        raise ResourceCapExceededError(f"{total} structures exceed the structure cap of {cap}")

    root = canonicalize(sentence)
    visited = 0
    for size in range(1, max_domain + 1):
        for structure in enumerate_structures(sentence, size):
            visited += 1
            for valuation in legal_fo_valuations(logic, structure, root):
                if not valuation[root].designated:
                    logger.info(
                        "Countermodel found",
                        logic=str(logic),
                        domain_size=size,
                        structures_visited=visited,
                    )
                    return Countermodel(structure, valuation)
    logger.info("No countermodel", logic=str(logic), max_domain=max_domain, structures=visited)
    return ValidUpTo(max_domain)
