"""Structural operations on formulas: free variables, substitution, complexity"""

from typing import Dict, FrozenSet, List, Tuple

from ..common.exceptions import ArityMismatchError, SubstitutionCaptureError
from .formulas import Atom, Box, Const, Forall, Formula, Imp, MetaVar, Neg, PropAtom, Term, Var


def free_vars(formula: Formula) -> FrozenSet[str]:
    """Names of the variables with a free occurrence in ``formula``."""
    return frozenset(free_vars_ordered(formula))


def free_vars_ordered(formula: Formula) -> Tuple[str, ...]:
    """Free variables in order of first occurrence (left to right)."""
    seen: List[str] = []
    _collect_free(formula, frozenset(), seen)
    return tuple(seen)


def _collect_free(formula: Formula, bound: FrozenSet[str], seen: List[str]) -> None:
    if isinstance(formula, Atom):
        for arg in formula.args:
            if isinstance(arg, Var) and arg.name not in bound and arg.name not in seen:
                seen.append(arg.name)
    elif isinstance(formula, (Neg, Box)):
        _collect_free(formula.body, bound, seen)
    elif isinstance(formula, Imp):
        _collect_free(formula.left, bound, seen)
        _collect_free(formula.right, bound, seen)
    elif isinstance(formula, Forall):
        _collect_free(formula.body, bound | {formula.var}, seen)


def is_sentence(formula: Formula) -> bool:
    return not free_vars(formula)


def is_free_for(term: Term, var: str, formula: Formula) -> bool:
    """
    Decide whether ``term`` may replace the free occurrences of ``var`` in ``formula``.

    Constants are always free for a variable. A variable ``z`` is free for ``var`` when no
    free occurrence of ``var`` lies in the scope of a quantifier binding ``z``.
    """
    if isinstance(term, Const):
        return True
    return _free_for(term.name, var, formula, frozenset())


def _free_for(name: str, var: str, formula: Formula, bound: FrozenSet[str]) -> bool:
    if isinstance(formula, Atom):
        occurs = any(isinstance(arg, Var) and arg.name == var for arg in formula.args)
        return not occurs or name not in bound
    if isinstance(formula, (Neg, Box)):
        return _free_for(name, var, formula.body, bound)
    if isinstance(formula, Imp):
        return _free_for(name, var, formula.left, bound) and _free_for(
            name, var, formula.right, bound
        )
    if isinstance(formula, Forall):
        if formula.var == var:
            return True
        return _free_for(name, var, formula.body, bound | {formula.var})
    return True


def substitute(formula: Formula, var: str, term: Term) -> Formula:
    """
    Replace every free occurrence of ``var`` in ``formula`` by ``term``.

    Raises:
        SubstitutionCaptureError: If ``term`` is a variable that is not free for ``var``.
    """
    if not is_free_for(term, var, formula):
        raise SubstitutionCaptureError(f"{term} is not free for {var}")
    return _substitute(formula, var, term)


def _substitute(formula: Formula, var: str, term: Term) -> Formula:
    if isinstance(formula, Atom):
        if not any(isinstance(arg, Var) and arg.name == var for arg in formula.args):
            return formula
        args = tuple(term if isinstance(a, Var) and a.name == var else a for a in formula.args)
        return Atom(formula.predicate, args)
    if isinstance(formula, Neg):
        return Neg(_substitute(formula.body, var, term))
    if isinstance(formula, Box):
        return Box(_substitute(formula.body, var, term))
    if isinstance(formula, Imp):
        return Imp(_substitute(formula.left, var, term), _substitute(formula.right, var, term))
    if isinstance(formula, Forall):
        if formula.var == var:
            return formula
        return Forall(formula.var, _substitute(formula.body, var, term))
    return formula


def complexity(formula: Formula) -> int:
    """Atoms count 0; negation, box and the universal quantifier add 1; implication sums."""
    if isinstance(formula, (Atom, PropAtom, MetaVar)):
        return 0
    if isinstance(formula, (Neg, Box, Forall)):
        return complexity(formula.body) + 1
    if isinstance(formula, Imp):
        return complexity(formula.left) + complexity(formula.right) + 1
    raise TypeError(f"Not a formula: {formula!r}")


def immediate_subformulas(formula: Formula) -> Tuple[Formula, ...]:
    if isinstance(formula, (Neg, Box, Forall)):
        return (formula.body,)
    if isinstance(formula, Imp):
        return (formula.left, formula.right)
    return ()


def subformulas(formula: Formula) -> List[Formula]:
    """Distinct subformulas, children before parents, left to right."""
    ordered: Dict[Formula, None] = {}

    def visit(node: Formula) -> None:
        if node in ordered:
            return
        for child in immediate_subformulas(node):
            visit(child)
        ordered[node] = None

    visit(formula)
    return list(ordered)


def constants_of(formula: Formula) -> Tuple[str, ...]:
    """Constants in order of first occurrence."""
    seen: Dict[str, None] = {}

    def visit(node: Formula) -> None:
        if isinstance(node, Atom):
            for arg in node.args:
                if isinstance(arg, Const):
                    seen.setdefault(arg.name, None)
        for child in immediate_subformulas(node):
            visit(child)

    visit(formula)
    return tuple(seen)


def predicates_of(formula: Formula) -> Dict[str, int]:
    """Predicate names with the arity they are used at."""
    arities: Dict[str, int] = {}

    def visit(node: Formula) -> None:
        if isinstance(node, Atom):
            known = arities.setdefault(node.predicate, len(node.args))
            if known != len(node.args):
                raise ArityMismatchError(
                    f"Predicate {node.predicate} used with arity {known} and {len(node.args)}"
                )
        for child in immediate_subformulas(node):
            visit(child)

    visit(formula)
    return arities


def is_propositional(formula: Formula) -> bool:
    return all(not isinstance(node, (Atom, Forall)) for node in subformulas(formula))


def is_first_order(formula: Formula) -> bool:
    return all(not isinstance(node, PropAtom) for node in subformulas(formula))


def universal_closure(formula: Formula) -> Formula:
    """Bind the free variables of ``formula``, the first-occurring one outermost."""
    closed = formula
    for name in reversed(free_vars_ordered(formula)):
        closed = Forall(name, closed)
    return closed
