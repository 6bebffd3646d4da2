"""
Tests for the formula generators and the tableau/oracle agreement harness.
"""

import random

import pytest

from src.harness import atom_names, enumerate_formulas, random_corpus, random_formula, run_agreement
from src.semantics import LogicId, TruthValue
from src.syntax import Box, Imp, Neg, PropAtom, complexity, parse
from src.tableau import Outcome, SignedFormula, saturate_prop

p = PropAtom("p")


def node_count(formula):
    if isinstance(formula, PropAtom):
        return 1
    if isinstance(formula, Imp):
        return 1 + node_count(formula.left) + node_count(formula.right)
    return 1 + node_count(formula.body)


def test_atom_names():
    """Atoms start at p"""
    assert atom_names(3) == ["p", "q", "r"]
    with pytest.raises(ValueError):
        atom_names(0)


def test_random_formula_has_requested_size():
    """Generated formulas have exactly the requested node count"""
    rng = random.Random(1)
    for size in range(1, 15):
        assert node_count(random_formula(rng, ["p", "q"], size)) == size


def test_random_corpus_is_deterministic():
    """The same seed yields the same corpus"""
    first = random_corpus(50, 8, 2, seed=7)
    assert first == random_corpus(50, 8, 2, seed=7)
    assert all(node_count(formula) <= 8 for formula in first)


def test_enumeration_order():
    """Atoms first, then negations, boxes and implications"""
    assert list(enumerate_formulas(1, 1)) == [p, Neg(p), Box(p), Imp(p, p)]


def test_enumeration_counts():
    """2, 8 and 48 formulas with 0, 1 and 2 connectives over two atoms"""
    formulas = list(enumerate_formulas(2, 2))
    assert len(formulas) == 2 + 8 + 48
    assert len(set(formulas)) == len(formulas)
    assert max(complexity(formula) for formula in formulas) == 2


def test_agreement_on_small_exhaustive_corpus():
    """Prover and oracle agree on every formula with at most three connectives"""
    formulas = list(enumerate_formulas(2, 3))
    report = run_agreement(list(LogicId), formulas)
    assert report.ok, report.mismatches[:5]
    for logic in LogicId:
        counts = report.counts[logic.value]
        assert counts["valid"] + counts["invalid"] == len(formulas)


def test_agreement_on_random_corpus():
    """Prover and oracle agree on a seeded random corpus"""
    report = run_agreement([LogicId.TM], random_corpus(300, 10, 2, seed=11), seed=11)
    assert report.ok
    assert report.seed == 11


def test_known_validity_counts():
    """[]p -> p is counted valid and [](p -> p) invalid"""
    report = run_agreement([LogicId.TM], [parse("[]p -> p"), parse("[](p -> p)")])
    assert report.counts["tm"] == {"valid": 1, "invalid": 1}


def test_parallel_run_matches_serial_run():
    """Worker processes produce the same report as a serial run"""
    formulas = random_corpus(40, 8, 2, seed=3)
    serial = run_agreement(list(LogicId), formulas, workers=1, seed=3)
    parallel = run_agreement(list(LogicId), formulas, workers=2, seed=3)
    assert serial.model_dump_json() == parallel.model_dump_json()


def test_first_order_formulas_rejected():
    """Only propositional formulas can be fuzzed"""
    with pytest.raises(ValueError):
        run_agreement([LogicId.TM], [parse("P(c)")])


@pytest.mark.slow
def test_agreement_exhaustive_five_connectives():
    """Every formula over p, q with at most five connectives"""
    report = run_agreement(list(LogicId), list(enumerate_formulas(2, 5)), workers=4)
    assert report.ok


@pytest.mark.slow
def test_agreement_exhaustive_six_connectives():
    """Every formula over p, q with at most six connectives, across worker processes"""
    formulas = list(enumerate_formulas(2, 6))
    assert len(formulas) == 259_674
    report = run_agreement(list(LogicId), formulas, workers=8)
    assert report.ok, report.mismatches[:5]


@pytest.mark.slow
def test_agreement_exhaustive_seven_connectives():
    """Every formula over p, q with at most seven connectives"""
    formulas = list(enumerate_formulas(2, 7))
    assert len(formulas) == 2_450_522
    report = run_agreement(list(LogicId), formulas, workers=8)
    assert report.ok, report.mismatches[:5]
    for logic in LogicId:
        counts = report.counts[logic.value]
        assert counts["valid"] + counts["invalid"] == len(formulas)


@pytest.mark.slow
def test_agreement_random_ten_thousand():
    """Ten thousand seeded formulas with at most twelve nodes, reproducibly"""
    formulas = random_corpus(10_000, 12, 2, seed=20151)
    report = run_agreement(list(LogicId), formulas, workers=4, seed=20151)
    assert report.ok
    again = run_agreement(
        list(LogicId), random_corpus(10_000, 12, 2, seed=20151), workers=4, seed=20151
    )
    assert report.model_dump_json() == again.model_dump_json()


@pytest.mark.slow
def test_saturation_terminates_on_corpus():
    """Saturation finishes without a budget and leaves no unused expression on open branches"""
    for formula in enumerate_formulas(2, 4):
        for logic in LogicId:
            result = saturate_prop(logic, SignedFormula.of(TruthValue.F, formula))
            assert result.outcome in (Outcome.CLOSED, Outcome.OPEN_FINISHED)
            if result.outcome == Outcome.OPEN_FINISHED:
                assert result.open_branch.is_finished()
