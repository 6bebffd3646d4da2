"""
Agreement between tableau provability and oracle validity.

Both procedures decide the same question for propositional formulas, so any disagreement
is a defect in one of them.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from ..common.config import settings
from ..common.logging import configure_logging
from ..oracle.propositional import is_valid_prop
from ..reporting.models import FuzzMismatch, FuzzReport
from ..semantics.values import LogicId
from ..syntax.formulas import Formula
from ..syntax.operations import is_propositional
from ..syntax.printer import to_text
from ..tableau.prover import prove

logger = structlog.get_logger(__name__)

_Task = Tuple[int, Formula, Tuple[str, ...], Optional[int]]
_Outcome = Tuple[int, List[Tuple[str, bool, bool]]]


def _check(task: _Task) -> _Outcome:
    index, formula, logics, node_cap = task
    results = []
    for logic in logics:
        proved = prove(LogicId(logic), formula).proved
        valid = is_valid_prop(LogicId(logic), formula, node_cap).valid
        results.append((logic, proved, valid))
    return index, results


def _init_worker(debug: bool, verbose: bool) -> None:
    configure_logging(debug=debug, verbose=verbose)


def run_agreement(
    logics: Sequence[LogicId],
    formulas: Sequence[Formula],
    workers: Optional[int] = None,
    node_cap: Optional[int] = None,
    seed: Optional[int] = None,
) -> FuzzReport:
    """
    Prove every formula in every logic and compare with the oracle.

    Args:
        logics: Logics to compare in.
        formulas: Propositional formulas; results are reported by position in this list.
        workers: Worker processes; 1 checks in this process.
        node_cap: Oracle node cap override.
        seed: Recorded in the report when the corpus was generated from a seed.

    Raises:
        ValueError: If a formula is not propositional.
    """
    logic_ids = tuple(LogicId(logic).value for logic in logics)
    workers = workers if workers is not None else settings.fuzz_workers
    for formula in formulas:
        if not is_propositional(formula):
            raise ValueError(f"fuzzing needs propositional formulas: {to_text(formula)}")

    tasks: List[_Task] = [(i, formula, logic_ids, node_cap) for i, formula in enumerate(formulas)]
    started = time.perf_counter()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(settings.debug, settings.verbose),
        ) as pool:
            outcomes = list(pool.map(_check, tasks, chunksize=max(1, len(tasks) // (workers * 8))))
    else:
        outcomes = [_check(task) for task in tasks]
    elapsed = time.perf_counter() - started

    counts: Dict[str, Dict[str, int]] = {logic: {"valid": 0, "invalid": 0} for logic in logic_ids}
    mismatches: List[FuzzMismatch] = []
    for index, results in sorted(outcomes, key=lambda outcome: outcome[0]):
        for logic, proved, valid in results:
            counts[logic]["valid" if valid else "invalid"] += 1
            if proved != valid:
                mismatches.append(
                    FuzzMismatch(
                        index=index,
                        logic=logic,
                        formula=to_text(formulas[index]),
                        tableau="proved" if proved else "not-proved",
                        oracle="valid" if valid else "invalid",
                    )
                )
                logger.error("Tableau and oracle disagree", index=index, logic=logic)

    logger.info(
        "Agreement run finished",
        formulas=len(formulas),
        logics=list(logic_ids),
        workers=workers,
        seconds=round(elapsed, 3),
        per_formula_ms=round(1000 * elapsed / max(1, len(formulas)), 3),
        mismatches=len(mismatches),
    )
    return FuzzReport(
        logics=list(logic_ids),
        formulas=len(formulas),
        seed=seed,
        counts=counts,
        mismatches=mismatches,
    )
