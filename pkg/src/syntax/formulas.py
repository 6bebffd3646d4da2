"""
Formula trees and predicate signatures.

The core tree has five connective-level node kinds (``Atom``/``PropAtom``, ``Neg``, ``Box``,
``Imp``, ``Forall``). Diamond, existential, conjunction and disjunction are built from
them by the helper constructors at the bottom of this module. ``MetaVar`` only occurs in
axiom schema patterns.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple, Union

from ..common.exceptions import ArityMismatchError, ConfigurationError

FRESH_PREFIX = "_k"
CANONICAL_VAR_PREFIX = "_v"

# Term names of this shape are variables unless a signature declares them as constants.
VARIABLE_NAME = re.compile(r"^[u-z][0-9]*$")


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Var, Const]


@dataclass(frozen=True)
class PropAtom:
    name: str


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: Tuple[Term, ...]

    def __post_init__(self) -> None:
        if not self.args:
            raise ArityMismatchError(f"Predicate {self.predicate} applied to no arguments")


@dataclass(frozen=True)
class Neg:
    body: "Formula"


@dataclass(frozen=True)
class Box:
    body: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class MetaVar:
    """Schema metavariable such as ``$A``; matches any formula."""

    name: str


Formula = Union[PropAtom, Atom, Neg, Box, Imp, Forall, MetaVar]

ATOMIC_TYPES = (PropAtom, Atom)


def fresh_constant(index: int) -> str:
    """Name of the ``index``-th constant of the reserved fresh pool (1-based)."""
    if index < 1:
        raise ValueError("fresh constant indices start at 1")
    return f"{FRESH_PREFIX}{index}"


def is_fresh_constant(name: str) -> bool:
    return name.startswith(FRESH_PREFIX) and name[len(FRESH_PREFIX):].isdigit()


@dataclass(frozen=True)
class Signature:
    """
    Predicate symbols with arities plus an ordered list of user constants.

    The fresh pool ``_k1, _k2, ...`` is implicit and disjoint from user names because user
    names must start with a letter.
    """

    predicates: Dict[str, int] = field(default_factory=dict)
    constants: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for name, arity in self.predicates.items():
            if arity < 1:
                raise ConfigurationError(f"Predicate {name} must have arity >= 1, got {arity}")
        overlap = set(self.predicates) & set(self.constants)
        if overlap:
            raise ConfigurationError(f"Names used both as predicate and constant: {sorted(overlap)}")
        if any(not name[:1].isalpha() for name in list(self.predicates) + list(self.constants)):
            raise ConfigurationError("User symbols must start with a letter")
        if len(set(self.constants)) != len(self.constants):
            raise ConfigurationError("Duplicate constant declaration")

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.predicates.items())), self.constants))

    def declares_constant(self, name: str) -> bool:
        return name in self.constants or is_fresh_constant(name)

    def merge(self, other: "Signature") -> "Signature":
        """Union of two signatures; conflicting arities raise ``ArityMismatchError``."""
        predicates = dict(self.predicates)
        for name, arity in other.predicates.items():
            if predicates.get(name, arity) != arity:
                raise ArityMismatchError(
                    f"Predicate {name} used with arity {predicates[name]} and {arity}"
                )
            predicates[name] = arity
        constants = list(self.constants)
        constants.extend(c for c in other.constants if c not in constants)
        return Signature(predicates=predicates, constants=tuple(constants))

    @classmethod
    def infer(cls, formulas: Iterable[Formula]) -> "Signature":
        """Collect the predicates and constants that occur in ``formulas``."""
        from .operations import constants_of, predicates_of

        signature = cls()
        for formula in formulas:
            user_constants = tuple(c for c in constants_of(formula) if not is_fresh_constant(c))
            signature = signature.merge(
                cls(predicates=predicates_of(formula), constants=user_constants)
            )
        return signature


def diamond(body: Formula) -> Formula:
    return Neg(Box(Neg(body)))


def exists(var: str, body: Formula) -> Formula:
    return Neg(Forall(var, Neg(body)))


def conjunction(left: Formula, right: Formula) -> Formula:
    return Neg(Imp(left, Neg(right)))


def disjunction(left: Formula, right: Formula) -> Formula:
    return Imp(Neg(left), right)
