"""ASCII printing in the input grammar; parse(to_text(f)) == f"""

from .formulas import Atom, Box, Forall, Formula, Imp, MetaVar, Neg, PropAtom


def to_text(formula: Formula) -> str:
    if isinstance(formula, Imp):
        return f"{_operand(formula.left)} -> {to_text(formula.right)}"
    return _operand(formula)


def _operand(formula: Formula) -> str:
    """Print at prefix-operator precedence, parenthesizing implications."""
    if isinstance(formula, PropAtom):
        return formula.name
    if isinstance(formula, Atom):
        return f"{formula.predicate}({','.join(str(arg) for arg in formula.args)})"
    if isinstance(formula, MetaVar):
        return f"${formula.name}"
    if isinstance(formula, Neg):
        return f"~{_operand(formula.body)}"
    if isinstance(formula, Box):
        return f"[]{_operand(formula.body)}"
    if isinstance(formula, Forall):
        return f"forall {formula.var} . {_operand(formula.body)}"
    if isinstance(formula, Imp):
        return f"({to_text(formula)})"
    raise TypeError(f"Not a formula: {formula!r}")
