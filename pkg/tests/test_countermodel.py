"""
Tests for Hintikka checks and countermodel extraction.
"""

from concurrent.futures import ProcessPoolExecutor

import pytest

from src.common.exceptions import BranchNotFinishedError
from src.countermodel import check_hintikka, extract_fo_countermodel, extract_prop_countermodel
from src.fo_models import Countermodel, bounded_validity, verify_countermodel
from src.harness import enumerate_formulas
from src.oracle import is_legal_assignment
from src.semantics import LogicId, TruthValue
from src.syntax import Atom, Const, PropAtom, canonicalize, parse
from src.tableau import Branch, Outcome, SignedFormula, run_systematic, saturate_prop

T, t, f, F = TruthValue.T, TruthValue.t, TruthValue.f, TruthValue.F
p = PropAtom("p")


def signed(sign, text):
    return SignedFormula.of(sign, parse(text))


def test_negation_pair_is_hintikka():
    """{T:~p, F:p} satisfies every clause"""
    assert check_hintikka([signed(T, "~p"), signed(F, "p")], []).passed


def test_true_box_needs_true_body():
    """{T:[]p} breaks the box clause"""
    report = check_hintikka([signed(T, "[]p")], [])
    assert not report.passed
    assert [v.clause for v in report.violations] == [3]


def test_contingent_box_in_tm():
    """{t:[]p, T:p} is a Tm Hintikka set"""
    assert check_hintikka([signed(t, "[]p"), signed(T, "p")], [], LogicId.TM).passed


def test_contingent_box_in_s4m():
    """S4m cannot satisfy t:[]p at all"""
    report = check_hintikka([signed(t, "[]p"), signed(T, "p")], [], LogicId.S4M)
    assert not report.passed


def test_conflicting_signs():
    """One sentence with two signs breaks clause 1"""
    report = check_hintikka([signed(T, "p"), signed(f, "p")], [])
    assert 1 in [v.clause for v in report.violations]


def test_universal_clauses_over_constants():
    """T:forall needs every instance T; f:forall needs an f witness"""
    universal = signed(T, "forall x . P(x)")
    assert check_hintikka([universal, signed(T, "P(a)"), signed(T, "P(b)")], ["a", "b"]).passed
    assert not check_hintikka([universal, signed(T, "P(a)")], ["a", "b"]).passed
    falsified = signed(f, "forall x . P(x)")
    assert check_hintikka([falsified, signed(f, "P(a)"), signed(T, "P(b)")], ["a", "b"]).passed
    assert not check_hintikka([falsified, signed(T, "P(a)")], ["a"]).passed


def test_extract_single_atom():
    """[F:p] gives p = F"""
    branch = Branch.from_expressions([SignedFormula(F, p)])
    assert extract_prop_countermodel(branch) == {p: F}


def test_extract_necessitation_counterexample():
    """The open f:[](p -> p) branch values p -> p at t and the box at f"""
    result = saturate_prop(LogicId.TM, signed(f, "[](p -> p)"))
    assignment = extract_prop_countermodel(result.open_branch)
    assert assignment[parse("p -> p")] == t
    assert assignment[parse("[](p -> p)")] == f
    assert is_legal_assignment(LogicId.TM, assignment)


def test_extract_refuses_unfinished_branch():
    """A branch with an unexpanded implication has no countermodel yet"""
    branch = Branch.from_expressions([signed(F, "p -> q")], used=False)
    with pytest.raises(BranchNotFinishedError):
        extract_prop_countermodel(branch)


def round_trip_failures(formula):
    failures = []
    for logic in LogicId:
        for sign in (F, f):
            result = saturate_prop(logic, SignedFormula.of(sign, formula))
            if result.outcome != Outcome.OPEN_FINISHED:
                continue
            branch = result.open_branch
            if not check_hintikka(branch.signed_formulas, [], logic).passed:
                failures.append((formula, logic, sign, "hintikka"))
                continue
            assignment = extract_prop_countermodel(branch)
            if not is_legal_assignment(logic, assignment):
                failures.append((formula, logic, sign, "illegal"))
            elif any(assignment[m.sentence] != m.sign for m in branch.signed_formulas):
                failures.append((formula, logic, sign, "sign"))
            elif assignment[formula].designated:
                failures.append((formula, logic, sign, "designated"))
    return failures


def test_open_branches_round_trip():
    """Every open saturated branch is Hintikka and yields a satisfying assignment"""
    failures = [
        failure for formula in enumerate_formulas(2, 3) for failure in round_trip_failures(formula)
    ]
    assert failures == []


@pytest.mark.slow
def test_open_branches_round_trip_six_connectives():
    """The same round trip over every formula in p, q with at most six connectives"""
    formulas = list(enumerate_formulas(2, 6))
    with ProcessPoolExecutor(max_workers=4) as pool:
        results = pool.map(round_trip_failures, formulas, chunksize=2000)
        failures = [failure for found in results for failure in found]
    assert failures == []


def test_extract_false_universal():
    """f:forall x . P(x) gives U = {_k1} with P(_k1) = f"""
    result = run_systematic(LogicId.TM, signed(f, "forall x . P(x)"), 10)
    countermodel = extract_fo_countermodel(result.open_branch)
    structure = countermodel.structure
    assert structure.domain == ("_k1",)
    assert structure.predicates["P"] == {("_k1",): f}
    assert countermodel.valuation[canonicalize(parse("forall x . P(x)"))] == f


def test_extract_impossible_universal():
    """F:forall x . P(x) gives P(_k1) = F"""
    result = run_systematic(LogicId.TM, signed(F, "forall x . P(x)"), 10)
    countermodel = extract_fo_countermodel(result.open_branch)
    assert countermodel.valuation[Atom("P", (Const("_k1"),))] == F
    assert countermodel.valuation[canonicalize(parse("forall x . P(x)"))] == F


def test_tableau_and_bounded_search_agree():
    """exists x . P(x) -> forall x . P(x) fails on two elements either way"""
    sentence = parse("exists x . P(x) -> forall x . P(x)")
    result = run_systematic(LogicId.TM, SignedFormula.of(F, sentence), 50)
    assert result.outcome == Outcome.OPEN_FINISHED
    extracted = extract_fo_countermodel(result.open_branch)
    assert len(extracted.structure.domain) == 2
    assert verify_countermodel(LogicId.TM, extracted.structure, extracted.valuation, sentence)

    searched = bounded_validity(LogicId.TM, sentence, 2)
    assert isinstance(searched, Countermodel)
    assert len(searched.structure.domain) == 2
    assert verify_countermodel(LogicId.TM, searched.structure, searched.valuation, sentence)
