"""Provability: closed tableaux from both non-designated starting signs"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence

import structlog

from ..common.exceptions import MixedLanguageError
from ..semantics.values import LogicId, TruthValue
from ..syntax.formulas import Formula, Imp
from ..syntax.operations import free_vars, is_first_order, is_propositional, universal_closure
from ..syntax.printer import to_text
from .engine import Outcome, SearchResult, run_systematic, saturate_prop
from .signed import SignedFormula

logger = structlog.get_logger(__name__)

ROOT_SIGNS = (TruthValue.F, TruthValue.f)


class VerdictStatus(str, Enum):
    PROVED = "proved"
    NOT_PROVED = "not-proved"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass
class ProofVerdict:
    """
    Verdict of the two searches.

    Attributes:
        status: Proved when both tableaux close; not proved when some search ends with an
            open finished branch; otherwise the budget ran out.
        target: The sentence both searches start from.
        searches: Search result per starting sign (F first, then f).
    """

    status: VerdictStatus
    target: Formula
    searches: Dict[TruthValue, SearchResult]

    @property
    def proved(self) -> bool:
        return self.status == VerdictStatus.PROVED

    def open_search(self) -> Optional[SearchResult]:
        for sign in ROOT_SIGNS:
            result = self.searches[sign]
            if result.outcome == Outcome.OPEN_FINISHED:
                return result
        return None


def nest_premises(premises: Sequence[Formula], formula: Formula) -> Formula:
    """Fold premises into ``p1 -> (p2 -> ... -> (pn -> formula))`` in the given order."""
    nested = formula
    for premise in reversed(premises):
        nested = Imp(premise, nested)
    return nested


def prove(logic: LogicId, formula: Formula, budget: Optional[int] = None) -> ProofVerdict:
    return prove_from(logic, [], formula, budget)


def prove_from(
    logic: LogicId,
    premises: Sequence[Formula],
    formula: Formula,
    budget: Optional[int] = None,
) -> ProofVerdict:
    """
    Decide provability of ``formula`` from ``premises`` by tableaux.

    Propositional input is saturated without a budget. First-order input runs the
    systematic procedure for ``budget`` stages per search; free variables are closed
    universally first.

    Raises:
        MixedLanguageError: If propositional and first-order syntax are combined.
    """
    logic = LogicId(logic)
    target = nest_premises(premises, formula)
    propositional = is_propositional(target)
    if not propositional and not is_first_order(target):
        raise MixedLanguageError("premises and conclusion mix propositional and first-order syntax")
    if free_vars(target):
        logger.info("Closing free variables", variables=sorted(free_vars(target)))
        target = universal_closure(target)

    searches: Dict[TruthValue, SearchResult] = {}
    for sign in ROOT_SIGNS:
        start = SignedFormula.of(sign, target)
        if propositional:
            searches[sign] = saturate_prop(logic, start)
        else:
            searches[sign] = run_systematic(logic, start, budget)

    outcomes = [result.outcome for result in searches.values()]
    if all(outcome == Outcome.CLOSED for outcome in outcomes):
        status = VerdictStatus.PROVED
    elif Outcome.OPEN_FINISHED in outcomes:
        status = VerdictStatus.NOT_PROVED
    else:
        status = VerdictStatus.BUDGET_EXHAUSTED
    logger.info("Proof search verdict", logic=str(logic), target=to_text(target), status=status.value)
    return ProofVerdict(status, target, searches)
