"""
Multioperator tables of the four-valued Nmatrices.

Every table is literal lookup data. ``allowed_values`` is the single place where the
tables are applied to formula nodes; the oracle, the model checker and the countermodel
extraction all go through it.
"""

from typing import Callable, Dict, Tuple

from ..syntax.formulas import Box, Formula, Imp, Neg
from .values import VALUE_ORDER, LogicId, TruthValue, ValueSet

T, t, f, F = TruthValue.T, TruthValue.t, TruthValue.f, TruthValue.F
_ = ValueSet.of

NEG_TABLE: Dict[TruthValue, ValueSet] = {
    T: _(F),
    t: _(f),
    f: _(t),
    F: _(T),
}

IMP_TABLE: Dict[Tuple[TruthValue, TruthValue], ValueSet] = {
    (T, T): _(T), (T, t): _(t), (T, f): _(f), (T, F): _(F),
    (t, T): _(T), (t, t): _(T, t), (t, f): _(f), (t, F): _(f),
    (f, T): _(T), (f, t): _(T, t), (f, f): _(T, t), (f, F): _(t),
    (F, T): _(T), (F, t): _(T), (F, f): _(T), (F, F): _(T),
}  # fmt: skip

BOX_TABLES: Dict[LogicId, Dict[TruthValue, ValueSet]] = {
    LogicId.TM: {T: _(T, t), t: _(f, F), f: _(f, F), F: _(f, F)},
    LogicId.S4M: {T: _(T), t: _(f, F), f: _(f, F), F: _(f, F)},
    LogicId.S5M: {T: _(T), t: _(F), f: _(F), F: _(F)},
}

# Rows for value sets not covered by the "contains" rows below.
_FORALL_ROWS: Dict[ValueSet, TruthValue] = {
    _(T): T,
    _(t): t,
    _(T, t): t,
    _(t, f): f,
    _(T, t, f): f,
    _(f): f,
    _(T, f): f,
}
_EXISTS_ROWS: Dict[ValueSet, TruthValue] = {
    _(t): t,
    _(t, F): t,
    _(t, f): t,
    _(t, f, F): t,
    _(f): f,
    _(f, F): f,
    _(F): F,
}

FORALL_TABLE: Dict[ValueSet, TruthValue] = {
    values: (F if F in values else _FORALL_ROWS[values]) for values in ValueSet.all_nonempty()
}
EXISTS_TABLE: Dict[ValueSet, TruthValue] = {
    values: (T if T in values else _EXISTS_ROWS[values]) for values in ValueSet.all_nonempty()
}


def neg_op(value: TruthValue) -> ValueSet:
    return NEG_TABLE[value]


def negate(value: TruthValue) -> TruthValue:
    """The unique member of ``neg_op(value)``."""
    return next(iter(NEG_TABLE[value]))


def imp_op(antecedent: TruthValue, consequent: TruthValue) -> ValueSet:
    return IMP_TABLE[(antecedent, consequent)]


def box_op(logic: LogicId, value: TruthValue) -> ValueSet:
    return BOX_TABLES[LogicId(logic)][value]


def forall_op(values: ValueSet) -> TruthValue:
    return FORALL_TABLE[values]


def exists_op(values: ValueSet) -> TruthValue:
    return EXISTS_TABLE[values]


def is_designated(value: TruthValue) -> bool:
    return value in (T, t)


def allowed_values(
    logic: LogicId, formula: Formula, value_of: Callable[[Formula], TruthValue]
) -> ValueSet:
    """
    Values a legal valuation may give ``formula`` once its immediate subformulas are valued.

    Args:
        logic: Selects the box table.
        formula: A negation, box or implication node.
        value_of: Lookup for the values of the immediate subformulas.

    Raises:
        TypeError: For atoms and quantified formulas, whose values are not chosen locally.
    """
    if isinstance(formula, Neg):
        return neg_op(value_of(formula.body))
    if isinstance(formula, Box):
        return box_op(logic, value_of(formula.body))
    if isinstance(formula, Imp):
        return imp_op(value_of(formula.left), value_of(formula.right))
    raise TypeError(f"No multioperator for {type(formula).__name__}")


__all__ = [
    "BOX_TABLES",
    "EXISTS_TABLE",
    "FORALL_TABLE",
    "IMP_TABLE",
    "NEG_TABLE",
    "VALUE_ORDER",
    "allowed_values",
    "box_op",
    "exists_op",
    "forall_op",
    "imp_op",
    "is_designated",
    "neg_op",
    "negate",
]
