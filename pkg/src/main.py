"""Command-line front end: prove, check, countermodel, hilbert and fuzz"""

import functools
import sys
from pathlib import Path
from typing import Callable, List, Literal, Optional, Sequence, Tuple

import click
from pydantic import BaseModel, ValidationError, field_validator

from .common.config import settings
from .common.exceptions import (
    ConfigurationError,
    DerivationFormatError,
    FormulaSyntaxError,
    NmatrixTableauxError,
    ResourceCapExceededError,
)
from .common.logging import configure_logging, get_logger
from .countermodel import extract_fo_countermodel, extract_prop_countermodel
from .fo_models import Countermodel, bounded_validity
from .harness import enumerate_formulas, random_corpus, run_agreement
from .hilbert import check_derivation, load_catalogue, parse_derivation
from .oracle import is_valid_prop
from .reporting import (
    CheckReport,
    HilbertReport,
    assignment_model,
    canonical_text,
    countermodel_model,
    proof_report,
    render_check_report,
    render_fuzz_report,
    render_hilbert_report,
    render_proof_report,
)
from .semantics import LogicId
from .syntax import Formula, Signature, is_propositional, parse, universal_closure
from .tableau import ProofVerdict, VerdictStatus, prove_from

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3
EXIT_RESOURCE = 4

LOGIC_CHOICE = click.Choice([logic.value for logic in LogicId], case_sensitive=False)


class RunConfig(BaseModel):
    """Options shared by the commands, with unset values taken from the settings."""

    logic: LogicId
    first_order: bool = False
    budget: int
    oracle_node_cap: int
    max_domain: int
    output_format: Literal["text", "json"] = "text"
    seed: Optional[int] = None

    @field_validator("budget", "oracle_node_cap", "max_domain")
    @classmethod
    def validate_positive(cls, v: int, info) -> int:
        """Budgets and caps are at least 1."""
        if v < 1:
            raise ValueError(f"{info.field_name} must be at least 1, got {v}")
        return v

    @classmethod
    def from_options(
        cls,
        logic: Optional[str] = None,
        first_order: bool = False,
        budget: Optional[int] = None,
        node_cap: Optional[int] = None,
        max_domain: Optional[int] = None,
        output_format: str = "text",
        seed: Optional[int] = None,
    ) -> "RunConfig":
        config = cls(
            logic=LogicId.parse(logic or settings.default_logic),
            first_order=first_order,
            budget=budget if budget is not None else settings.stage_budget,
            oracle_node_cap=node_cap if node_cap is not None else settings.oracle_node_cap,
            max_domain=max_domain if max_domain is not None else settings.max_domain,
            output_format=output_format,
            seed=seed if seed is not None else settings.fuzz_seed,
        )
        logger.debug("Run configured", **config.model_dump(mode="json"))
        return config


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def handles_errors(command: Callable) -> Callable:
    """Map library errors to exit codes: 3 for bad input, 4 for resource caps."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ResourceCapExceededError as e:
            logger.warning("Resource cap exceeded", error=str(e))
            _fail(EXIT_RESOURCE, str(e))
        except (FormulaSyntaxError, DerivationFormatError, ConfigurationError) as e:
            _fail(EXIT_INPUT, str(e))
        except ValidationError as e:
            messages = "; ".join(error["msg"] for error in e.errors())
            _fail(EXIT_INPUT, messages)
        except ValueError as e:
            _fail(EXIT_INPUT, str(e))
        except NmatrixTableauxError as e:
            logger.error("Command failed", error=e.message, **e.details)
            _fail(EXIT_INPUT, str(e))

    return wrapper


def shared_options(command: Callable) -> Callable:
    options = [
        click.option("--logic", type=LOGIC_CHOICE, default=None, help="tm, s4m or s5m"),
        click.option("--fo", "first_order", is_flag=True, help="First-order input"),
        click.option("--budget", type=int, default=None, help="Stage budget per tableau"),
        click.option("--node-cap", type=int, default=None, help="Oracle subformula cap"),
        click.option("--max-domain", type=int, default=None, help="Bounded search domain size"),
        click.option("--seed", type=int, default=None, help="Seed recorded with the run"),
        click.option(
            "--format",
            "output_format",
            type=click.Choice(["text", "json"]),
            default="text",
            show_default=True,
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def read_formulas(config: RunConfig, texts: Sequence[str]) -> List[Formula]:
    """Parse formula texts and check they agree on arities and on the language."""
    formulas = [parse(text) for text in texts]
    Signature.infer(formulas)
    for text, formula in zip(texts, formulas):
        propositional = is_propositional(formula)
        if config.first_order and propositional:
            raise FormulaSyntaxError(f"--fo given but {text!r} is propositional")
        if not config.first_order and not propositional:
            raise FormulaSyntaxError(f"{text!r} is first-order; pass --fo")
    return formulas


def emit(config: RunConfig, report: BaseModel, text: str) -> None:
    if config.output_format == "json":
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(text)


@click.group()
@click.option("--verbose", is_flag=True, help="Log progress to stderr")
@click.option("--debug", is_flag=True, help="Log everything to stderr, human-readable")
@click.version_option(settings.app_version, prog_name=settings.app_name)
def cli(verbose: bool, debug: bool) -> None:
    """Four-valued modal logic prover for Tm, S4m, S5m and their first-order extensions."""
    configure_logging(debug=debug or settings.debug, verbose=verbose or settings.verbose)


def _countermodel_of(verdict: ProofVerdict, first_order: bool):
    search = verdict.open_search()
    if search is None or search.open_branch is None:
        return None, None
    if first_order:
        return None, extract_fo_countermodel(search.open_branch)
    return extract_prop_countermodel(search.open_branch), None


@cli.command()
@shared_options
@click.option("--premise", "premises", multiple=True, help="Premise formula (repeatable)")
@click.option("--tree/--no-tree", default=True, help="Print both tableaux in text output")
@click.argument("formula")
@handles_errors
def prove(premises: Tuple[str, ...], tree: bool, formula: str, **options) -> None:
    """Decide FORMULA by tableaux: exit 0 proved, 1 not proved, 2 budget exhausted."""
    config = RunConfig.from_options(**options)
    *gamma, target = read_formulas(config, list(premises) + [formula])
    verdict = prove_from(config.logic, gamma, target, config.budget)
    assignment, countermodel = None, None
    if verdict.status == VerdictStatus.NOT_PROVED:
        assignment, countermodel = _countermodel_of(verdict, config.first_order)
    report = proof_report(
        config.logic.value, config.first_order, gamma, target, verdict, assignment, countermodel
    )
    emit(config, report, render_proof_report(report, show_tableaux=tree))
    sys.exit(
        {
            VerdictStatus.PROVED: EXIT_OK,
            VerdictStatus.NOT_PROVED: EXIT_NEGATIVE,
            VerdictStatus.BUDGET_EXHAUSTED: EXIT_BUDGET,
        }[verdict.status]
    )


@cli.command()
@shared_options
@click.argument("formula")
@handles_errors
def check(formula: str, **options) -> None:
    """Decide FORMULA semantically: exit 0 valid, 1 invalid, 4 over a resource cap."""
    config = RunConfig.from_options(**options)
    (parsed,) = read_formulas(config, [formula])
    if config.first_order:
        result = bounded_validity(config.logic, universal_closure(parsed), config.max_domain)
        if isinstance(result, Countermodel):
            report = CheckReport(
                logic=config.logic.value,
                first_order=True,
                formula=canonical_text(parsed),
                valid=False,
                countermodel=countermodel_model(result),
            )
        else:
            report = CheckReport(
                logic=config.logic.value,
                first_order=True,
                formula=canonical_text(parsed),
                valid=True,
                valid_up_to=result.domain_size,
            )
    else:
        verdict = is_valid_prop(config.logic, parsed, config.oracle_node_cap)
        report = CheckReport(
            logic=config.logic.value,
            first_order=False,
            formula=canonical_text(parsed),
            valid=verdict.valid,
            assignments_checked=verdict.assignments_checked,
            assignment=(
                assignment_model(verdict.counter_assignment)
                if verdict.counter_assignment is not None
                else None
            ),
        )
    emit(config, report, render_check_report(report))
    sys.exit(EXIT_OK if report.valid else EXIT_NEGATIVE)


@cli.command()
@shared_options
@click.option("--premise", "premises", multiple=True, help="Premise formula (repeatable)")
@click.argument("formula")
@handles_errors
def countermodel(premises: Tuple[str, ...], formula: str, **options) -> None:
    """
    Print a verified countermodel for FORMULA.

    Exit 0 with a countermodel, 1 when FORMULA is proved, 2 when neither the tableau nor
    the bounded search settles it.
    """
    config = RunConfig.from_options(**options)
    *gamma, target = read_formulas(config, list(premises) + [formula])
    verdict = prove_from(config.logic, gamma, target, config.budget)
    assignment, found = None, None
    if verdict.status == VerdictStatus.NOT_PROVED:
        assignment, found = _countermodel_of(verdict, config.first_order)
    elif verdict.status == VerdictStatus.BUDGET_EXHAUSTED and config.first_order:
        logger.info("No finished branch within budget, trying bounded search")
        result = bounded_validity(config.logic, verdict.target, config.max_domain)
        if isinstance(result, Countermodel):
            found = result
    report = proof_report(
        config.logic.value, config.first_order, gamma, target, verdict, assignment, found
    )
    emit(config, report, render_proof_report(report, show_tableaux=False))
    if assignment is not None or found is not None:
        sys.exit(EXIT_OK)
    sys.exit(EXIT_NEGATIVE if verdict.proved else EXIT_BUDGET)


@cli.command()
@click.option("--logic", type=LOGIC_CHOICE, default=None, help="tm, s4m or s5m")
@click.option("--fo", "first_order", is_flag=True, help="First-order calculus with Gen")
@click.option("--premise", "premises", multiple=True, help="Premise formula (repeatable)")
@click.option("--dmt-guard", is_flag=True, help="Reject Gen on variables free in a premise")
@click.option("--axioms", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--seed", type=int, default=None, help="Seed recorded with the run")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text")
@click.argument("derivation_file", type=click.Path(exists=True, dir_okay=False))
@handles_errors
def hilbert(
    logic: Optional[str],
    first_order: bool,
    premises: Tuple[str, ...],
    dmt_guard: bool,
    axioms: Optional[str],
    seed: Optional[int],
    output_format: str,
    derivation_file: str,
) -> None:
    """Check a Hilbert derivation: exit 0 accepted, 1 rejected."""
    config = RunConfig.from_options(
        logic=logic, first_order=first_order, output_format=output_format, seed=seed
    )
    gamma = [parse(text) for text in premises]
    derivation = parse_derivation(Path(derivation_file).read_text(encoding="utf-8"))
    verdict = check_derivation(
        config.logic, gamma, derivation, first_order, dmt_guard, load_catalogue(axioms)
    )
    report = HilbertReport(
        logic=config.logic.value,
        first_order=first_order,
        premises=[canonical_text(p) for p in gamma],
        conclusion=canonical_text(verdict.conclusion),
        accepted=verdict.accepted,
        step=verdict.step,
        reason=verdict.reason.value if verdict.reason else None,
        detail=verdict.detail,
        axioms={number: found.schema for number, found in (verdict.matches or {}).items()},
    )
    emit(config, report, render_hilbert_report(report))
    sys.exit(EXIT_OK if verdict.accepted else EXIT_NEGATIVE)


@cli.command()
@click.option("--logic", "logics", type=LOGIC_CHOICE, multiple=True, help="Default: all three")
@click.option("--count", type=int, default=None, help="Random formulas to generate")
@click.option("--max-size", type=int, default=None, help="Node bound per random formula")
@click.option("--atoms", type=int, default=None, help="Number of atoms")
@click.option("--seed", type=int, default=None)
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("--exhaustive", type=int, default=None, help="Enumerate all formulas up to N connectives")
@click.option("--node-cap", type=int, default=None, help="Oracle subformula cap")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text")
@handles_errors
def fuzz(
    logics: Tuple[str, ...],
    count: Optional[int],
    max_size: Optional[int],
    atoms: Optional[int],
    seed: Optional[int],
    workers: Optional[int],
    exhaustive: Optional[int],
    node_cap: Optional[int],
    output_format: str,
) -> None:
    """Compare tableau provability with oracle validity; exit 1 on any disagreement."""
    config = RunConfig.from_options(
        logic=logics[0] if logics else None,
        node_cap=node_cap,
        output_format=output_format,
        seed=seed,
    )
    selected = [LogicId.parse(logic) for logic in logics] if logics else list(LogicId)
    atom_count = atoms if atoms is not None else settings.fuzz_atoms
    if exhaustive is not None:
        formulas = list(enumerate_formulas(atom_count, exhaustive))
        corpus_seed = None
    else:
        formulas = random_corpus(
            count if count is not None else settings.fuzz_count,
            max_size if max_size is not None else settings.fuzz_max_size,
            atom_count,
            config.seed,
        )
        corpus_seed = config.seed
    report = run_agreement(selected, formulas, workers, config.oracle_node_cap, corpus_seed)
    emit(config, report, render_fuzz_report(report))
    sys.exit(EXIT_OK if report.ok else EXIT_NEGATIVE)


if __name__ == "__main__":
    cli()
