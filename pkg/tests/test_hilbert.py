"""
Tests for axiom schema matching and the Hilbert derivation checker.
"""

from pathlib import Path

import pytest

from src.common.exceptions import ConfigurationError, DerivationFormatError
from src.fo_models import ValidUpTo, bounded_validity
from src.hilbert import (
    AxiomCatalogue,
    RejectReason,
    check_derivation,
    instantiate,
    load_catalogue,
    match_axiom,
    parse_derivation,
)
from src.oracle import is_valid_prop
from src.semantics import LogicId
from src.syntax import Atom, Const, PropAtom, Var, parse
from src.tableau import prove

FIXTURES = Path(__file__).parent / "fixtures" / "derivations"


def fixture(name):
    return parse_derivation((FIXTURES / name).read_text(encoding="utf-8"))


def test_catalogue_loads_default_file():
    """The bundled catalogue defines every schema and all three logics"""
    catalogue = load_catalogue()
    assert {"Ax1", "Ax4", "K", "A4", "A5", "BF"} <= set(catalogue.schemas)
    assert "A4" not in catalogue.axiom_set(LogicId.TM)
    assert "A4" in catalogue.axiom_set(LogicId.S4M)
    assert "A5" in catalogue.axiom_set(LogicId.S5M)
    assert "Ax4" not in catalogue.axiom_set(LogicId.TM)
    assert "Ax4" in catalogue.axiom_set(LogicId.TM, first_order=True)


def test_aliases_resolve():
    """The numeric labels name the introspection schemas"""
    catalogue = load_catalogue()
    assert catalogue.resolve("4").name == "A5"
    assert catalogue.resolve("5").name == "A4"
    assert catalogue.resolve("nope") is None


def test_missing_catalogue(tmp_path):
    """A missing catalogue file is a configuration error"""
    with pytest.raises(ConfigurationError):
        AxiomCatalogue(str(tmp_path / "absent.yaml"))


def test_catalogue_with_unknown_schema(tmp_path):
    """Logics may only list defined schemas"""
    path = tmp_path / "axioms.yaml"
    path.write_text(
        "schemas:\n  Ax1: {pattern: \"$A -> ($B -> $A)\"}\n"
        "logics:\n  tm: {propositional: [Ax1, Ax9]}\n  s4m: {extends: tm}\n  s5m: {extends: s4m}\n",
        encoding="utf-8",
    )
    with pytest.raises(ConfigurationError):
        AxiomCatalogue(str(path))


def test_match_ax1():
    """Ax1 binds A and B"""
    found = match_axiom(load_catalogue().schemas["Ax1"], parse("p -> (q -> p)"))
    assert found is not None
    assert found.formulas == {"A": PropAtom("p"), "B": PropAtom("q")}


def test_match_ax1_rejects_inconsistent_binding():
    """Both occurrences of A must be the same formula"""
    assert match_axiom(load_catalogue().schemas["Ax1"], parse("p -> (q -> r)")) is None


def test_match_instantiation_axiom():
    """Ax4 records the substituted term"""
    found = match_axiom(load_catalogue().schemas["Ax4"], parse("forall x . P(x) -> P(c)"))
    assert found is not None
    assert found.formulas["A"] == Atom("P", (Var("x"),))
    assert found.term == Const("c")


def test_instantiation_axiom_needs_an_instance():
    """P(c) -> Q(c) is not an instance of forall x . P(x)"""
    assert match_axiom(load_catalogue().schemas["Ax4"], parse("forall x . P(x) -> Q(c)")) is None


def test_match_ax5_refuses_free_variable():
    """Ax5 does not match when x is free in the antecedent"""
    formula = parse("forall x . (P(x) -> Q(x)) -> (P(x) -> forall x . Q(x))")
    assert match_axiom(load_catalogue().schemas["Ax5"], formula) is None


def test_match_ax6_variants():
    """Ax6 joins alphabetic variants"""
    schema = load_catalogue().schemas["Ax6"]
    assert match_axiom(schema, parse("forall x . P(x) -> forall y . P(y)")) is not None
    assert match_axiom(schema, parse("forall x . P(x) -> forall y . Q(y)")) is None


def test_identity_derivation():
    """The five-step derivation of p -> p is accepted in every logic"""
    derivation = fixture("identity.txt")
    for logic in LogicId:
        verdict = check_derivation(logic, [], derivation)
        assert verdict.accepted
        assert verdict.conclusion == parse("p -> p")
        assert verdict.matches[1].schema == "Ax1"
        assert verdict.matches[2].schema == "Ax2"


def test_first_order_identity_derivation():
    """forall x . P(x) -> forall x . P(x) via Ax4, Gen, Ax5 and MP"""
    verdict = check_derivation(LogicId.TM, [], fixture("forall_identity.txt"), first_order=True)
    assert verdict.accepted


def test_gen_needs_first_order_mode():
    """Without first-order mode the same derivation fails"""
    verdict = check_derivation(LogicId.TM, [], fixture("forall_identity.txt"))
    assert not verdict.accepted
    assert verdict.step == 1
    assert verdict.reason == RejectReason.SCHEMA_NOT_IN_SET


def test_swapped_modus_ponens():
    """Swapping the MP indices is rejected at step 5"""
    verdict = check_derivation(LogicId.TM, [], fixture("identity_bad_mp.txt"))
    assert not verdict.accepted
    assert verdict.step == 5
    assert verdict.reason == RejectReason.MP_SHAPE


def test_mislabelled_axiom():
    """An Ax1 instance labelled Ax2 is rejected at step 1"""
    verdict = check_derivation(LogicId.TM, [], fixture("identity_bad_axiom.txt"))
    assert not verdict.accepted
    assert verdict.step == 1
    assert verdict.reason == RejectReason.NO_AXIOM_MATCH


def test_generalizing_a_premise_variable():
    """Gen on x after premise P(x) is rejected by the deduction-theorem guard"""
    derivation = fixture("gen_guarded.txt")
    premises = [parse("P(x)")]
    guarded = check_derivation(LogicId.TM, premises, derivation, first_order=True, dmt_guard=True)
    assert not guarded.accepted
    assert guarded.step == 2
    assert guarded.reason == RejectReason.DMT_GUARD
    assert check_derivation(LogicId.TM, premises, derivation, first_order=True).accepted


def test_introspection_schema_outside_its_logic():
    """A5 is rejected in S4m and accepted in S5m"""
    derivation = parse_derivation("1. ~[]~[]p -> []p ; axiom A5")
    verdict = check_derivation(LogicId.S4M, [], derivation)
    assert verdict.reason == RejectReason.SCHEMA_NOT_IN_SET
    assert check_derivation(LogicId.S5M, [], derivation).accepted
    assert check_derivation(LogicId.S5M, [], parse_derivation("1. ~[]~[]p -> []p ; axiom 4")).accepted


def test_forward_reference():
    """MP may only cite earlier steps"""
    derivation = parse_derivation("1. p -> (q -> p) ; axiom Ax1\n2. q -> p ; mp 3,1\n")
    verdict = check_derivation(LogicId.TM, [], derivation)
    assert verdict.step == 2
    assert verdict.reason == RejectReason.BAD_INDEX


def test_unknown_premise():
    """A premise step must be one of the given premises"""
    verdict = check_derivation(LogicId.TM, [parse("q")], parse_derivation("1. p ; premise"))
    assert verdict.reason == RejectReason.PREMISE_NOT_FOUND


def test_malformed_derivation():
    """Bad numbering and unknown justifications are format errors"""
    with pytest.raises(DerivationFormatError):
        parse_derivation("2. p ; premise")
    with pytest.raises(DerivationFormatError) as excinfo:
        parse_derivation("1. p ; lemma 3")
    assert excinfo.value.line == 1
    assert excinfo.value.details == {"line": 1}
    with pytest.raises(DerivationFormatError):
        parse_derivation("# nothing here\n")


def test_propositional_axioms_match_the_semantics():
    """Each schema is valid in exactly the logics whose axiom set contains it"""
    catalogue = load_catalogue()
    metavariables = {"A": PropAtom("p"), "B": PropAtom("q"), "C": PropAtom("r")}
    for name in catalogue.axiom_set(LogicId.S5M).names:
        formula = instantiate(catalogue.schemas[name].pattern, metavariables)
        for logic in LogicId:
            expected = name in catalogue.axiom_set(logic)
            assert is_valid_prop(logic, formula).valid == expected, f"{name} in {logic}"


def test_barcan_schemas_valid_on_small_domains():
    """BF, CBF, NBF and PBF instances have no countermodel up to two elements"""
    catalogue = load_catalogue()
    metavariables = {"A": Atom("P", (Var("x"),))}
    for name in ("BF", "CBF", "NBF", "PBF"):
        formula = instantiate(catalogue.schemas[name].pattern, metavariables)
        assert bounded_validity(LogicId.TM, formula, 2) == ValidUpTo(2), name


def test_accepted_conclusions_are_provable():
    """Conclusions of accepted derivations close under the tableau prover"""
    assert prove(LogicId.TM, parse("p -> p")).proved
    assert prove(LogicId.TM, parse("forall x . P(x) -> forall x . P(x)"), budget=100).proved
