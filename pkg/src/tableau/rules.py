"""
Tableau rules as data.

Each propositional rule lists, per branch, the signs its consequences carry. A rule with
no branches closes the branch it is applied on. Quantifier rules pick constants from the
branch they extend.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..common.exceptions import NoRuleApplicableError
from ..semantics.nmatrix import negate
from ..semantics.values import LogicId, TruthValue
from ..syntax.formulas import Box, Forall, Imp, Neg
from .signed import Expression, MarkedSignedFormula, SignedFormula, instance
from .tree import Branch

T, t, f, F = TruthValue.T, TruthValue.t, TruthValue.f, TruthValue.F

# Sign of the boxed formula on each branch.
BOX_RULES: Dict[LogicId, Dict[TruthValue, Tuple[TruthValue, ...]]] = {
    LogicId.TM: {T: (T,), t: (T,), f: (t, f, F), F: (t, f, F)},
    LogicId.S4M: {T: (T,), t: (), f: (t, f, F), F: (t, f, F)},
    LogicId.S5M: {T: (T,), t: (), f: (), F: (t, f, F)},
}

# (antecedent sign, consequent sign) per branch; None leaves that side unconstrained.
IMP_RULES: Dict[TruthValue, Tuple[Tuple[Optional[TruthValue], Optional[TruthValue]], ...]] = {
    T: ((F, None), (t, t), (f, t), (f, f), (None, T)),
    t: ((T, t), (t, t), (f, t), (f, f), (f, F)),
    f: ((T, f), (t, f), (t, F)),
    F: ((T, F),),
}

CLOSE_MARK = "×"


@dataclass(frozen=True)
class RuleApplication:
    """
    Result of applying one rule to one branch.

    Attributes:
        rule: Display name such as ``T→`` or ``t∀[_k1]``.
        extensions: Expressions to append, one tuple per new branch; empty means close.
        fresh: Constant the rule introduced as new to the branch, if any.
    """

    rule: str
    extensions: Tuple[Tuple[Expression, ...], ...]
    fresh: Optional[str] = None

    @property
    def closes(self) -> bool:
        return not self.extensions


def expand(logic: LogicId, expression: Expression, branch: Branch) -> RuleApplication:
    """
    Apply the unique rule matching ``expression`` on ``branch``.

    Raises:
        NoRuleApplicableError: If ``expression`` is atomic.
    """
    logic = LogicId(logic)
    if isinstance(expression, MarkedSignedFormula):
        return _reuse_marked(expression, branch)
    sign, sentence = expression.sign, expression.sentence
    if isinstance(sentence, Neg):
        return RuleApplication(f"{sign}¬", ((SignedFormula(negate(sign), sentence.body),),))
    if isinstance(sentence, Box):
        signs = BOX_RULES[logic][sign]
        rule = f"{sign}□" if signs else f"{sign}□{CLOSE_MARK}"
        return RuleApplication(rule, tuple((SignedFormula(s, sentence.body),) for s in signs))
    if isinstance(sentence, Imp):
        extensions = []
        for left, right in IMP_RULES[sign]:
            extension = []
            if left is not None:
                extension.append(SignedFormula(left, sentence.left))
            if right is not None:
                extension.append(SignedFormula(right, sentence.right))
            extensions.append(tuple(extension))
        return RuleApplication(f"{sign}→", tuple(extensions))
    if isinstance(sentence, Forall):
        return _quantifier(sign, sentence, branch)
    raise NoRuleApplicableError(f"No rule applies to atomic {expression}")


def _quantifier(sign: TruthValue, sentence: Forall, branch: Branch) -> RuleApplication:
    if sign == T:
        name = branch.first_constant(lambda c: not branch.contains(T, instance(sentence, c)))
        fresh = name if name not in branch.constants else None
        extension = (SignedFormula(T, instance(sentence, name)), SignedFormula(T, sentence))
        return RuleApplication(f"T∀[{name}]", (extension,), fresh)
    name = branch.fresh_constant()
    if sign == F:
        return RuleApplication(f"F∀[{name}]", ((SignedFormula(F, instance(sentence, name)),),), name)
    extension = (
        SignedFormula(sign, instance(sentence, name)),
        MarkedSignedFormula(sign, sentence, name),
    )
    return RuleApplication(f"{sign}∀[{name}]", (extension,), name)


def _reuse_marked(marked: MarkedSignedFormula, branch: Branch) -> RuleApplication:
    sentence, mark = marked.sentence, marked.mark
    branch_signs = (t, T) if marked.sign == t else (f, T, t)
    extensions = []
    for sign in branch_signs:
        name = branch.first_constant(
            lambda c, s=sign: not branch.contains(s, instance(sentence, c)), exclude=mark
        )
        extensions.append((SignedFormula(sign, instance(sentence, name)), marked))
    return RuleApplication(f"{marked.sign}∀[{mark}]*", tuple(extensions))
