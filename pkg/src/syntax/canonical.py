"""Variant normal form: void quantifiers removed, bound variables renamed by nesting depth"""

from functools import lru_cache
from typing import Dict

from .formulas import CANONICAL_VAR_PREFIX, Atom, Box, Forall, Formula, Imp, Neg, Var
from .operations import free_vars


@lru_cache(maxsize=200_000)
def canonicalize(formula: Formula) -> Formula:
    """
    Return the canonical representative of the variant class of ``formula``.

    Two formulas are variants of each other exactly when their canonical forms are equal.
    Free variables keep their names; each surviving binder is renamed ``_v<depth>``.
    """
    return _canon(formula, 0, {})


def _canon(formula: Formula, depth: int, env: Dict[str, str]) -> Formula:
    if isinstance(formula, Atom):
        if not env:
            return formula
        args = tuple(
            Var(env[a.name]) if isinstance(a, Var) and a.name in env else a for a in formula.args
        )
        return Atom(formula.predicate, args)
    if isinstance(formula, Neg):
        return Neg(_canon(formula.body, depth, env))
    if isinstance(formula, Box):
        return Box(_canon(formula.body, depth, env))
    if isinstance(formula, Imp):
        return Imp(_canon(formula.left, depth, env), _canon(formula.right, depth, env))
    if isinstance(formula, Forall):
        if formula.var not in free_vars(formula.body):
            return _canon(formula.body, depth, env)
        name = f"{CANONICAL_VAR_PREFIX}{depth + 1}"
        return Forall(name, _canon(formula.body, depth + 1, {**env, formula.var: name}))
    return formula


def is_variant(left: Formula, right: Formula) -> bool:
    return canonicalize(left) == canonicalize(right)
