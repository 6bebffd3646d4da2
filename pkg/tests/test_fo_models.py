"""
Tests for finite structures, legal first-order valuations and bounded validity.
"""

import pytest

from src.common.exceptions import ResourceCapExceededError
from src.fo_models import (
    Countermodel,
    FourValuedStructure,
    ValidUpTo,
    bounded_validity,
    count_structures,
    find_violation,
    instantiation_closure,
    legal_fo_valuations,
    verify_countermodel,
)
from src.fo_models.model_checker import CLAUSE_FORALL, CLAUSE_NEGATION
from src.semantics import LogicId, TruthValue
from src.syntax import Atom, Const, canonicalize, parse

T, t, f, F = TruthValue.T, TruthValue.t, TruthValue.f, TruthValue.F


def unary(domain, values, constants=None):
    return FourValuedStructure(
        domain=tuple(domain),
        predicates={"P": {(element,): value for element, value in zip(domain, values)}},
        constants=dict(constants or {}),
        arities={"P": 1},
    )


def test_closure_of_atom():
    """An atomic sentence is its own closure"""
    assert instantiation_closure(parse("P(c)"), ["c"]) == [parse("P(c)")]


def test_closure_of_universal():
    """A universal sentence brings in one instance per constant"""
    sentence = parse("forall x . P(x)")
    closure = instantiation_closure(sentence, ["c1", "c2"])
    assert set(closure) == {canonicalize(sentence), parse("P(c1)"), parse("P(c2)")}
    assert closure[-1] == canonicalize(sentence)


def test_closure_needs_a_sentence():
    """Open formulas are rejected"""
    with pytest.raises(ValueError):
        instantiation_closure(parse("P(x)"), ["c"])


def test_structure_validation():
    """Empty domains and partial tables are rejected"""
    with pytest.raises(ValueError):
        unary([], [])
    with pytest.raises(ValueError):
        FourValuedStructure(("u",), {"P": {}}, {}, {"P": 1})
    with pytest.raises(ValueError):
        unary(["u"], [T], {"c": "w"})


def test_naming_expansion():
    """Unnamed elements get underscore names"""
    structure = unary(["u1", "u2"], [T, F], {"c": "u1"})
    assert structure.names() == ["c", "_u2"]
    assert structure.atom_value(parse("P(c)")) == T


def test_universal_over_single_true_element():
    """U = {u}, P(u) = T forces forall x . P(x) to T"""
    structure = unary(["u"], [T])
    sentence = canonicalize(parse("forall x . P(x)"))
    valuations = list(legal_fo_valuations(LogicId.TM, structure, sentence))
    assert len(valuations) == 1
    assert valuations[0][sentence] == T


def test_s5m_box_of_contingent_truth():
    """In S5m a box over a t-valued atom is F"""
    structure = unary(["u"], [t], {"c": "u"})
    sentence = parse("[]P(c)")
    valuations = list(legal_fo_valuations(LogicId.S5M, structure, sentence))
    assert [v[sentence] for v in valuations] == [F]


def test_barcan_formula_valid_up_to_two():
    """BF has no countermodel with at most two elements"""
    result = bounded_validity(LogicId.TM, parse("forall x . []P(x) -> [] forall x . P(x)"), 2)
    assert result == ValidUpTo(2)


def test_instantiation_axiom_valid_up_to_one():
    """forall x . P(x) -> P(c) has no one-element countermodel"""
    assert bounded_validity(LogicId.TM, parse("forall x . P(x) -> P(c)"), 1) == ValidUpTo(1)


def test_quantifier_swap_countermodel():
    """forall-exists does not imply exists-forall; two elements suffice"""
    sentence = parse("forall x . exists y . R(x,y) -> exists y . forall x . R(x,y)")
    assert bounded_validity(LogicId.TM, sentence, 1) == ValidUpTo(1)
    result = bounded_validity(LogicId.TM, sentence, 2)
    assert isinstance(result, Countermodel)
    assert len(result.structure.domain) == 2
    assert verify_countermodel(LogicId.TM, result.structure, result.valuation, sentence)
    assert not result.valuation[canonicalize(sentence)].designated


def test_negation_clause_violation():
    """A negation valued like its body breaks clause 2"""
    structure = unary(["u"], [T], {"c": "u"})
    sentence = parse("~P(c)")
    violation = find_violation(LogicId.TM, structure, {parse("P(c)"): T, sentence: T}, sentence)
    assert violation is not None
    assert violation.clause == CLAUSE_NEGATION


def test_universal_clause_violation():
    """A universal valued t over instances F and T breaks clause 5"""
    structure = unary(["u1", "u2"], [F, T])
    sentence = canonicalize(parse("forall x . P(x)"))
    valuation = {
        Atom("P", (Const("_u1"),)): F,
        Atom("P", (Const("_u2"),)): T,
        sentence: t,
    }
    violation = find_violation(LogicId.TM, structure, valuation, sentence)
    assert violation is not None
    assert violation.clause == CLAUSE_FORALL
    assert not verify_countermodel(LogicId.TM, structure, valuation, sentence)


def test_structure_count():
    """Unary P with one constant over two elements: 4^2 tables times 2 maps"""
    assert count_structures(parse("P(c)"), 2) == 32


def test_structure_cap():
    """Searches beyond the structure cap are refused"""
    with pytest.raises(ResourceCapExceededError):
        bounded_validity(LogicId.TM, parse("forall x . P(x) -> P(c)"), 2, structure_cap=3)
