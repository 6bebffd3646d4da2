"""
Axiom schemas and their catalogue.

Schemas live in a YAML catalogue (``config/axioms.yaml`` by default) so the axiom sets of
the three calculi can be read and changed without touching the checker.
"""

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import structlog
import yaml

from ..common.config import settings
from ..common.exceptions import ConfigurationError, FormulaSyntaxError
from ..semantics.values import LogicId
from ..syntax.canonical import is_variant
from ..syntax.formulas import Atom, Box, Forall, Formula, Imp, MetaVar, Neg, PropAtom, Term, Var
from ..syntax.operations import free_vars, is_free_for, substitute
from ..syntax.parser import parse_pattern

logger = structlog.get_logger(__name__)

CONDITIONS = ("instance", "not-free", "variant")


@dataclass(frozen=True)
class AxiomSchema:
    """A named pattern with an optional side condition."""

    name: str
    pattern: Formula
    condition: Optional[str] = None
    text: str = ""


@dataclass
class SchemaMatch:
    """
    Result of matching a formula against a schema.

    Attributes:
        schema: Name of the matched schema.
        formulas: Metavariable name (without ``$``) to the formula it stands for.
        variables: Pattern variable to the variable it matched.
        term: The substituted term, for schemas with the ``instance`` condition.
    """

    schema: str
    formulas: Dict[str, Formula]
    variables: Dict[str, str] = field(default_factory=dict)
    term: Optional[Term] = None


class _Matcher:
    """Leftmost-outermost structural matching of one pattern against one formula."""

    def __init__(self) -> None:
        self.formulas: Dict[str, Formula] = {}
        self.variables: Dict[str, str] = {}
        self.scopes: Dict[str, List[FrozenSet[str]]] = {}

    def match(self, pattern: Formula, formula: Formula, bound: FrozenSet[str]) -> bool:
        if isinstance(pattern, MetaVar):
            self.scopes.setdefault(pattern.name, []).append(bound)
            known = self.formulas.setdefault(pattern.name, formula)
            return known == formula
        if isinstance(pattern, (PropAtom, Atom)):
            return pattern == formula
        if type(pattern) is not type(formula):
            return False
        if isinstance(pattern, (Neg, Box)):
            return self.match(pattern.body, formula.body, bound)
        if isinstance(pattern, Imp):
            return self.match(pattern.left, formula.left, bound) and self.match(
                pattern.right, formula.right, bound
            )
        if isinstance(pattern, Forall):
            if self.variables.setdefault(pattern.var, formula.var) != formula.var:
                return False
            return self.match(pattern.body, formula.body, bound | {formula.var})
        return False

    def capture_free(self) -> bool:
        """No instance has a free variable bound at some of its occurrences but not all."""
        for name, scopes in self.scopes.items():
            exposed = frozenset().union(*scopes) - frozenset.intersection(*scopes)
            if exposed & free_vars(self.formulas[name]):
                return False
        return True


def _substituted_term(
    body: Formula, result: Formula, var: str, bound: FrozenSet[str] = frozenset()
) -> Optional[Term]:
    """The term standing where ``body`` has its first free ``var``, if the shapes agree."""
    if isinstance(body, Atom):
        if not isinstance(result, Atom) or len(body.args) != len(result.args):
            return None
        for arg, other in zip(body.args, result.args):
            if isinstance(arg, Var) and arg.name == var and var not in bound:
                return other
        return None
    if type(body) is not type(result):
        return None
    if isinstance(body, (Neg, Box)):
        return _substituted_term(body.body, result.body, var, bound)
    if isinstance(body, Imp):
        found = _substituted_term(body.left, result.left, var, bound)
        if found is not None:
            return found
        return _substituted_term(body.right, result.right, var, bound)
    if isinstance(body, Forall):
        return _substituted_term(body.body, result.body, var, bound | {body.var})
    return None


def match_axiom(schema: AxiomSchema, formula: Formula) -> Optional[SchemaMatch]:
    """
    Match ``formula`` against ``schema``, side condition included.

    Returns:
        The metavariable assignment, or None when the formula is not an instance.
    """
    matcher = _Matcher()
    if not matcher.match(schema.pattern, formula, frozenset()) or not matcher.capture_free():
        return None
    found = SchemaMatch(schema.name, dict(matcher.formulas), dict(matcher.variables))

    if schema.condition == "instance":
        var = next(iter(found.variables.values()))
        body, result = found.formulas["A"], found.formulas["B"]
        term = _substituted_term(body, result, var) or Var(var)
        if not is_free_for(term, var, body) or substitute(body, var, term) != result:
            return None
        found.term = term
    elif schema.condition == "not-free":
        var = next(iter(found.variables.values()))
        if var in free_vars(found.formulas["A"]):
            return None
    elif schema.condition == "variant":
        if not is_variant(found.formulas["A"], found.formulas["B"]):
            return None
    return found


@dataclass(frozen=True)
class LogicAxiomSet:
    """Schema names available to one calculus; Gen is available in first-order mode only."""

    logic: LogicId
    first_order: bool
    names: Tuple[str, ...]

    @property
    def allows_generalization(self) -> bool:
        return self.first_order

    def __contains__(self, name: object) -> bool:
        return name in self.names


class AxiomCatalogue:
    """
    Schemas and per-logic axiom sets loaded from a YAML file.

    The file defines ``schemas`` (name to pattern and optional condition), ``aliases``
    (extra names for existing schemas) and ``logics`` (per logic, propositional and
    first-order schema lists, optionally extending another logic).
    """

    def __init__(self, config_path: str):
        self.config_path = config_path
        self.schemas: Dict[str, AxiomSchema] = {}
        self.aliases: Dict[str, str] = {}
        self._sets: Dict[Tuple[LogicId, bool], Tuple[str, ...]] = {}
        self._load_config()

    def _load_config(self) -> None:
        """Load, parse and validate the catalogue."""
        if not os.path.exists(self.config_path):
            raise ConfigurationError(f"Axiom catalogue not found: {self.config_path}")
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid axiom catalogue {self.config_path}: {e}") from e

        for name, entry in (config.get("schemas") or {}).items():
            self.schemas[str(name)] = self._schema(str(name), entry)
        for alias, target in (config.get("aliases") or {}).items():
            if str(target) not in self.schemas:
                raise ConfigurationError(f"Alias {alias} names unknown schema {target}")
            self.aliases[str(alias)] = str(target)

        logics = config.get("logics") or {}
        for logic in LogicId:
            if logic.value not in logics:
                raise ConfigurationError(f"Axiom catalogue has no entry for {logic.value}")
            for first_order in (False, True):
                self._sets[(logic, first_order)] = self._collect(logics, logic.value, first_order)
        logger.info(
            "Axiom catalogue loaded",
            path=self.config_path,
            schemas=len(self.schemas),
            aliases=len(self.aliases),
        )

    def _schema(self, name: str, entry: Any) -> AxiomSchema:
        if not isinstance(entry, dict) or "pattern" not in entry:
            raise ConfigurationError(f"Schema {name} needs a pattern")
        condition = entry.get("condition")
        if condition is not None and condition not in CONDITIONS:
            raise ConfigurationError(f"Schema {name} has unknown condition {condition}")
        try:
            pattern = parse_pattern(str(entry["pattern"]))
        except FormulaSyntaxError as e:
            raise ConfigurationError(f"Schema {name} has a malformed pattern: {e}") from e
        return AxiomSchema(name, pattern, condition, str(entry["pattern"]))

    def _collect(self, logics: Dict[str, Any], key: str, first_order: bool) -> Tuple[str, ...]:
        entry = logics.get(key)
        if entry is None:
            raise ConfigurationError(f"Unknown logic {key} in axiom catalogue")
        names: List[str] = []
        if entry.get("extends"):
            names.extend(self._collect(logics, str(entry["extends"]), first_order))
        sections = ["propositional", "first_order"] if first_order else ["propositional"]
        for section in sections:
            for name in entry.get(section) or []:
                if str(name) not in self.schemas:
                    raise ConfigurationError(f"Logic {key} lists unknown schema {name}")
                if str(name) not in names:
                    names.append(str(name))
        return tuple(names)

    def resolve(self, name: str) -> Optional[AxiomSchema]:
        """Schema by name or alias."""
        return self.schemas.get(self.aliases.get(name, name))

    def axiom_set(self, logic: LogicId, first_order: bool = False) -> LogicAxiomSet:
        logic = LogicId(logic)
        return LogicAxiomSet(logic, first_order, self._sets[(logic, first_order)])

    def identify(self, formula: Formula, axioms: LogicAxiomSet) -> Optional[SchemaMatch]:
        """First schema of ``axioms`` that ``formula`` instantiates."""
        for name in axioms.names:
            found = match_axiom(self.schemas[name], formula)
            if found is not None:
                return found
        return None


@lru_cache(maxsize=8)
def _load(path: str) -> AxiomCatalogue:
    return AxiomCatalogue(path)


def load_catalogue(path: Optional[str] = None) -> AxiomCatalogue:
    """Catalogue at ``path``, else the configured one; loaded once per path."""
    return _load(str(path) if path is not None else str(settings.resolved_axioms_file()))


def instantiate(pattern: Formula, formulas: Dict[str, Formula]) -> Formula:
    """Replace every metavariable of ``pattern`` by its formula."""
    if isinstance(pattern, MetaVar):
        if pattern.name not in formulas:
            raise KeyError(f"No formula for ${pattern.name}")
        return formulas[pattern.name]
    if isinstance(pattern, Neg):
        return Neg(instantiate(pattern.body, formulas))
    if isinstance(pattern, Box):
        return Box(instantiate(pattern.body, formulas))
    if isinstance(pattern, Imp):
        return Imp(instantiate(pattern.left, formulas), instantiate(pattern.right, formulas))
    if isinstance(pattern, Forall):
        return Forall(pattern.var, instantiate(pattern.body, formulas))
    return pattern
