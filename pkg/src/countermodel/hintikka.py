"""Hintikka conditions over a finite universe of constants"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Set, Tuple

import structlog

from ..semantics.nmatrix import negate
from ..semantics.values import LogicId, TruthValue
from ..syntax.formulas import Box, Forall, Formula, Imp, Neg
from ..tableau.rules import BOX_RULES, IMP_RULES
from ..tableau.signed import SignedFormula, instance

logger = structlog.get_logger(__name__)

T, t, f, F = TruthValue.T, TruthValue.t, TruthValue.f, TruthValue.F

# Clause numbers for implications and universal formulas, by sign.
_IMP_CLAUSE = {T: 5, t: 6, f: 7, F: 8}
_FORALL_CLAUSE = {T: 9, t: 10, f: 11, F: 12}


@dataclass(frozen=True)
class HintikkaViolation:
    clause: int
    witnesses: Tuple[SignedFormula, ...]
    detail: str


@dataclass
class HintikkaReport:
    violations: List[HintikkaViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def check_hintikka(
    signed_formulas: Iterable[SignedFormula],
    constants: Sequence[str],
    logic: LogicId = LogicId.TM,
) -> HintikkaReport:
    """
    Check the twelve Hintikka clauses for a set of signed formulas.

    Universal clauses are checked over ``constants`` only. The box clauses use the rules
    of ``logic``, so a t- or f-signed box that the logic cannot satisfy is a violation.
    """
    logic = LogicId(logic)
    members = list(dict.fromkeys(signed_formulas))
    signs: Dict[Formula, Set[TruthValue]] = {}
    for member in members:
        signs.setdefault(member.sentence, set()).add(member.sign)

    def has(sign: TruthValue, sentence: Formula) -> bool:
        return sign in signs.get(sentence, ())

    report = HintikkaReport()

    def fail(clause: int, witness: SignedFormula, detail: str) -> None:
        report.violations.append(HintikkaViolation(clause, (witness,), detail))

    for sentence, found in signs.items():
        if len(found) > 1:
            witnesses = tuple(SignedFormula(s, sentence) for s in sorted(found, key=lambda v: -v.rank))
            report.violations.append(HintikkaViolation(1, witnesses, "sentence carries two signs"))

    for member in members:
        sign, sentence = member.sign, member.sentence
        if isinstance(sentence, Neg):
            if not has(negate(sign), sentence.body):
                fail(2, member, f"missing {negate(sign)}-signed body")
        elif isinstance(sentence, Box):
            clause = 3 if sign in (T, t) else 4
            allowed = BOX_RULES[logic][sign]
            present = [s for s in allowed if has(s, sentence.body)]
            if not allowed:
                fail(clause, member, f"{sign}-signed box is unsatisfiable in {logic.display_name}")
            elif len(present) != 1:
                fail(clause, member, f"body needs exactly one sign among {[str(s) for s in allowed]}")
        elif isinstance(sentence, Imp):
            if not any(
                (left is None or has(left, sentence.left))
                and (right is None or has(right, sentence.right))
                for left, right in IMP_RULES[sign]
            ):
                fail(_IMP_CLAUSE[sign], member, "no admissible sign pair for the components")
        elif isinstance(sentence, Forall):
            detail = _check_universal(sign, sentence, constants, has)
            if detail:
                fail(_FORALL_CLAUSE[sign], member, detail)

    if report.violations:
        logger.debug(
            "Hintikka check failed",
            clauses=sorted({v.clause for v in report.violations}),
            size=len(members),
        )
    return report


def _check_universal(sign: TruthValue, sentence: Forall, constants: Sequence[str], has) -> str:
    instances = [instance(sentence, name) for name in constants]
    if sign == T:
        missing = [i for i in instances if not has(T, i)]
        return "instance not T-signed" if missing else ""
    if sign == F:
        return "" if any(has(F, i) for i in instances) else "no F-signed instance"
    witness, others = (t, (T, t)) if sign == t else (f, (T, t, f))
    if not any(has(witness, i) for i in instances):
        return f"no {witness}-signed instance"
    for i in instances:
        if not any(has(s, i) for s in others):
            return f"instance without a sign among {[str(s) for s in others]}"
        if sign == f and has(F, i):
            return "F-signed instance"
    return ""
