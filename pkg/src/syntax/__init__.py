"""Formula syntax: trees, signatures, substitution, variants, parsing and printing"""

from .formulas import (
    Atom,
    Box,
    Const,
    Forall,
    Formula,
    Imp,
    MetaVar,
    Neg,
    PropAtom,
    Signature,
    Term,
    Var,
    conjunction,
    diamond,
    disjunction,
    exists,
    fresh_constant,
    is_fresh_constant,
)
from .operations import (
    complexity,
    constants_of,
    free_vars,
    is_first_order,
    is_free_for,
    is_propositional,
    is_sentence,
    predicates_of,
    subformulas,
    substitute,
    universal_closure,
)
from .canonical import canonicalize, is_variant
from .parser import parse, parse_pattern
from .printer import to_text

__all__ = [
    "Atom",
    "Box",
    "Const",
    "Forall",
    "Formula",
    "Imp",
    "MetaVar",
    "Neg",
    "PropAtom",
    "Signature",
    "Term",
    "Var",
    "canonicalize",
    "complexity",
    "conjunction",
    "constants_of",
    "diamond",
    "disjunction",
    "exists",
    "free_vars",
    "fresh_constant",
    "is_first_order",
    "is_free_for",
    "is_fresh_constant",
    "is_propositional",
    "is_sentence",
    "is_variant",
    "parse",
    "parse_pattern",
    "predicates_of",
    "subformulas",
    "substitute",
    "to_text",
    "universal_closure",
]
