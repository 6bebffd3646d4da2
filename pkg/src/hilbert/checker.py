"""Step-by-step verification of Hilbert derivations"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence

import structlog

from ..semantics.values import LogicId
from ..syntax.formulas import Forall, Formula, Imp
from ..syntax.operations import free_vars
from ..syntax.printer import to_text
from .derivation import AxiomRef, Derivation, Generalization, ModusPonens, Premise
from .schemas import AxiomCatalogue, SchemaMatch, load_catalogue, match_axiom

logger = structlog.get_logger(__name__)


class RejectReason(str, Enum):
    BAD_INDEX = "bad-index"
    NO_AXIOM_MATCH = "no-axiom-match"
    SCHEMA_NOT_IN_SET = "schema-not-in-set"
    MP_SHAPE = "mp-shape"
    PREMISE_NOT_FOUND = "premise-not-found"
    GEN_SHAPE = "gen-shape"
    GEN_NOT_ALLOWED = "gen-not-allowed"
    DMT_GUARD = "dmt-guard"


@dataclass
class DerivationVerdict:
    """
    Accept, or reject at the earliest failing step.

    Attributes:
        accepted: Whether every step checked out.
        conclusion: Formula of the last step.
        step: 1-based number of the rejected step.
        reason: Why that step was rejected.
        detail: Human-readable explanation.
        matches: Schema match for every axiom step, by step number.
    """

    accepted: bool
    conclusion: Formula
    step: Optional[int] = None
    reason: Optional[RejectReason] = None
    detail: str = ""
    matches: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.accepted


def check_derivation(
    logic: LogicId,
    premises: Sequence[Formula],
    derivation: Derivation,
    first_order: bool = False,
    dmt_guard: bool = False,
    catalogue: Optional[AxiomCatalogue] = None,
) -> DerivationVerdict:
    """
    Check that every step of ``derivation`` is a premise, an axiom of ``logic`` or follows
    by MP or Gen from earlier steps.

    With ``dmt_guard`` set, Gen may not quantify a variable that is free in a premise the
    generalized step depends on.
    """
    logic = LogicId(logic)
    catalogue = catalogue or load_catalogue()
    axioms = catalogue.axiom_set(logic, first_order)
    formulas: List[Formula] = []
    depends: List[FrozenSet[int]] = []
    matches: dict = {}

    def reject(number: int, reason: RejectReason, detail: str) -> DerivationVerdict:
        logger.info(
            "Derivation rejected", logic=str(logic), step=number, reason=reason.value, detail=detail
        )
        return DerivationVerdict(False, derivation.conclusion, number, reason, detail, matches)

    def earlier(number: int, index: int) -> bool:
        return 1 <= index < number

    for step in derivation.steps:
        number, formula, why = step.number, step.formula, step.justification
        uses: FrozenSet[int] = frozenset()

        if isinstance(why, Premise):
            positions = [i for i, premise in enumerate(premises) if premise == formula]
            if not positions:
                return reject(number, RejectReason.PREMISE_NOT_FOUND, to_text(formula))
            uses = frozenset(positions[:1])

        elif isinstance(why, AxiomRef):
            schema = catalogue.resolve(why.name)
            if schema is None:
                return reject(number, RejectReason.NO_AXIOM_MATCH, f"unknown schema {why.name}")
            if schema.name not in axioms:
                return reject(
                    number,
                    RejectReason.SCHEMA_NOT_IN_SET,
                    f"{why.name} is not an axiom of {logic.display_name}"
                    + ("*" if first_order else ""),
                )
            found: Optional[SchemaMatch] = match_axiom(schema, formula)
            if found is None:
                return reject(number, RejectReason.NO_AXIOM_MATCH, f"not an instance of {why.name}")
            matches[number] = found

        elif isinstance(why, ModusPonens):
            if not (earlier(number, why.minor) and earlier(number, why.major)):
                return reject(number, RejectReason.BAD_INDEX, f"mp {why.minor},{why.major}")
            major = formulas[why.major - 1]
            if major != Imp(formulas[why.minor - 1], formula):
                return reject(
                    number,
                    RejectReason.MP_SHAPE,
                    f"step {why.major} is not step {why.minor} -> this step",
                )
            uses = depends[why.minor - 1] | depends[why.major - 1]

        elif isinstance(why, Generalization):
            if not axioms.allows_generalization:
                return reject(number, RejectReason.GEN_NOT_ALLOWED, "gen needs first-order mode")
            if not earlier(number, why.step):
                return reject(number, RejectReason.BAD_INDEX, f"gen {why.step}")
            if formula != Forall(why.variable, formulas[why.step - 1]):
                return reject(
                    number,
                    RejectReason.GEN_SHAPE,
                    f"expected forall {why.variable} . <step {why.step}>",
                )
            uses = depends[why.step - 1]
            if dmt_guard:
                guarded = [i for i in sorted(uses) if why.variable in free_vars(premises[i])]
                if guarded:
                    return reject(
                        number,
                        RejectReason.DMT_GUARD,
                        f"{why.variable} is free in premise {to_text(premises[guarded[0]])}",
                    )

        formulas.append(formula)
        depends.append(uses)

    logger.info("Derivation accepted", logic=str(logic), steps=len(derivation))
    return DerivationVerdict(True, derivation.conclusion, matches=matches)
