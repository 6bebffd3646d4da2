"""
Tests for tableau rules, the stage engine and the prover.
"""

import pytest

from src.common.exceptions import MixedLanguageError, NoRuleApplicableError
from src.semantics import VALUE_ORDER, LogicId, TruthValue, box_op, imp_op
from src.syntax import Atom, Box, Const, Forall, Imp, Neg, PropAtom, canonicalize, parse
from src.tableau import (
    BOX_RULES,
    IMP_RULES,
    Branch,
    MarkedSignedFormula,
    Outcome,
    SignedFormula,
    VerdictStatus,
    expand,
    is_branch_closed,
    prove,
    prove_from,
    run_systematic,
    saturate_prop,
)

T, t, f, F = TruthValue.T, TruthValue.t, TruthValue.f, TruthValue.F
p, q = PropAtom("p"), PropAtom("q")


def signed(sign, text):
    return SignedFormula.of(sign, parse(text))


def branch_of(*expressions, logic=LogicId.TM):
    return Branch.from_expressions(list(expressions), logic)


def test_false_implication_rule():
    """F:(p -> q) extends with T:p and F:q"""
    start = signed(F, "p -> q")
    application = expand(LogicId.TM, start, branch_of(start))
    assert application.extensions == ((SignedFormula(T, p), SignedFormula(F, q)),)


def test_s5m_false_box_closes():
    """f:[]p has no S5m branch"""
    start = signed(f, "[]p")
    assert expand(LogicId.S5M, start, branch_of(start, logic=LogicId.S5M)).closes


def test_false_universal_uses_fresh_constant():
    """F:forall x . P(x) on a branch with c instantiates _k1"""
    start = signed(F, "forall x . P(x)")
    branch = branch_of(signed(T, "Q(c)"), start)
    application = expand(LogicId.TM, start, branch)
    assert application.fresh == "_k1"
    assert application.extensions == ((SignedFormula(F, Atom("P", (Const("_k1"),))),),)


def test_contingent_universal_adds_marked_formula():
    """t:forall x . P(x) instantiates a fresh constant and leaves a marked copy"""
    start = signed(t, "forall x . P(x)")
    application = expand(LogicId.TM, start, branch_of(start))
    (extension,) = application.extensions
    instance, marked = extension
    assert instance.sign == t
    assert marked == MarkedSignedFormula(t, canonicalize(parse("forall x . P(x)")), "_k1")


def test_atoms_have_no_rule():
    """Expanding an atom is an error"""
    start = signed(T, "p")
    with pytest.raises(NoRuleApplicableError):
        expand(LogicId.TM, start, branch_of(start))


def test_every_compound_signed_formula_has_a_rule():
    """Negation, box and implication expand under every sign and logic"""
    for logic in LogicId:
        for sign in VALUE_ORDER:
            for formula in (Neg(p), Box(p), Imp(p, q)):
                start = SignedFormula.of(sign, formula)
                expand(logic, start, branch_of(start, logic=logic))


def test_box_rules_follow_the_tables():
    """Each box branch lists exactly the body values the table allows"""
    for logic in LogicId:
        for sign in VALUE_ORDER:
            allowed = {v for v in VALUE_ORDER if sign in box_op(logic, v)}
            assert set(BOX_RULES[logic][sign]) == allowed


def test_implication_rules_cover_the_table():
    """Every antecedent/consequent pair admitted by the table satisfies some branch"""
    for sign in VALUE_ORDER:
        for a in VALUE_ORDER:
            for b in VALUE_ORDER:
                if sign not in imp_op(a, b):
                    continue
                assert any(
                    (left is None or left == a) and (right is None or right == b)
                    for left, right in IMP_RULES[sign]
                ), f"{sign}:({a} -> {b}) not covered"


def test_implication_rules_are_sound():
    """No branch admits a pair the table rules out"""
    for sign in VALUE_ORDER:
        for left, right in IMP_RULES[sign]:
            if left is not None and right is not None:
                assert sign in imp_op(left, right)


def test_rule_consequences_are_simpler():
    """Propositional rules only add proper subformulas"""
    for logic in LogicId:
        for sign in VALUE_ORDER:
            start = signed(sign, "[](p -> ~q)")
            for extension in expand(logic, start, branch_of(start, logic=logic)).extensions:
                for expression in extension:
                    assert expression.sentence == parse("p -> ~q")


def test_branch_closure():
    """Different signs on variants close a branch"""
    assert is_branch_closed(branch_of(signed(T, "p"), signed(F, "p")))
    assert is_branch_closed(branch_of(signed(T, "forall x . P(x)"), signed(f, "forall y . P(y)")))
    assert not is_branch_closed(branch_of(signed(T, "p"), signed(T, "p")))


def test_saturate_reflexivity_closes():
    """F:([]p -> p) closes in Tm"""
    result = saturate_prop(LogicId.TM, signed(F, "[]p -> p"))
    assert result.outcome == Outcome.CLOSED


def test_saturate_necessitation_stays_open():
    """f:[](p -> p) leaves an open branch containing t:(p -> p)"""
    result = saturate_prop(LogicId.TM, signed(f, "[](p -> p)"))
    assert result.outcome == Outcome.OPEN_FINISHED
    assert result.open_branch.contains(t, parse("p -> p"))
    assert result.open_branch.is_finished()


def test_saturate_s4m_contingent_box_closes():
    """t:[]p is impossible in S4m"""
    assert saturate_prop(LogicId.S4M, signed(t, "[]p")).outcome == Outcome.CLOSED


def test_saturate_rejects_first_order():
    """Propositional saturation needs a propositional sentence"""
    with pytest.raises(ValueError):
        saturate_prop(LogicId.TM, signed(F, "P(c)"))


def test_prove_propositional_verdicts():
    """Verdicts for reflexivity and converse introspection"""
    assert prove(LogicId.TM, parse("[]p -> p")).proved
    assert prove(LogicId.S5M, parse("~[]~[]p -> []p")).proved
    verdict = prove(LogicId.S4M, parse("~[]~[]p -> []p"))
    assert verdict.status == VerdictStatus.NOT_PROVED
    assert verdict.open_search() is not None


def test_prove_from_premises():
    """Premises are folded into nested implications"""
    verdict = prove_from(LogicId.TM, [parse("p"), parse("p -> q")], parse("q"))
    assert verdict.proved
    assert verdict.target == parse("p -> ((p -> q) -> q)")


def test_prove_rejects_mixed_languages():
    """A propositional premise with a first-order goal is refused"""
    with pytest.raises(MixedLanguageError):
        prove_from(LogicId.TM, [parse("p")], parse("P(c)"))


@pytest.mark.parametrize(
    "text",
    [
        "forall x . P(x) -> P(c)",
        "forall x . (Q(c) -> P(x)) -> (Q(c) -> forall x . P(x))",
        "forall x . []P(x) -> [] forall x . P(x)",
        "[] forall x . P(x) -> forall x . []P(x)",
        "forall x . <>P(x) -> <> forall x . P(x)",
        "<> forall x . P(x) -> forall x . <>P(x)",
    ],
)
def test_first_order_theorems(text):
    """Quantifier axioms and Barcan-type formulas close within 200 stages"""
    assert prove(LogicId.TM, parse(text), budget=200).proved


def test_free_variables_are_closed():
    """P(x) -> P(x) is proved as its universal closure"""
    verdict = prove(LogicId.TM, parse("P(x) -> P(x)"), budget=50)
    assert verdict.proved
    assert isinstance(verdict.target, Forall)


def test_false_universal_finishes_open():
    """f:forall x . P(x) yields an open finished branch after one stage"""
    result = run_systematic(LogicId.TM, signed(f, "forall x . P(x)"), 10)
    assert result.outcome == Outcome.OPEN_FINISHED
    assert result.stages == 1
    assert result.open_branch.universe() == ["_k1"]


def test_quantifier_swap_is_not_proved():
    """forall-exists to exists-forall is not proved within a small budget"""
    sentence = parse("forall x . exists y . R(x,y) -> exists y . forall x . R(x,y)")
    assert not prove(LogicId.TM, sentence, budget=40).proved


@pytest.mark.slow
def test_quantifier_swap_full_budget():
    """The same formula stays unproved at the default budget"""
    sentence = parse("forall x . exists y . R(x,y) -> exists y . forall x . R(x,y)")
    assert not prove(LogicId.TM, sentence, budget=500).proved


def test_selection_is_fair():
    """Selected node depths never decrease from stage to stage"""
    result = run_systematic(LogicId.TM, signed(F, "forall x . []P(x) -> [] forall x . P(x)"), 60)
    depths = result.tableau.selection_depths
    assert depths == sorted(depths)


def test_fresh_constants_are_new_to_their_branch():
    """Every fresh constant was absent from the branch it was introduced on"""
    sentence = parse("forall x . exists y . R(x,y) -> exists y . forall x . R(x,y)")
    for sign in (F, f):
        result = run_systematic(LogicId.TM, SignedFormula.of(sign, sentence), 30)
        assert result.tableau.fresh_log
        for constant, previous in result.tableau.fresh_log:
            assert constant not in previous


def test_budget_must_be_positive():
    """A zero budget is rejected"""
    with pytest.raises(ValueError):
        run_systematic(LogicId.TM, signed(F, "forall x . P(x) -> P(c)"), 0)
