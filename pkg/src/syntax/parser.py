"""Lark-based reader for the ASCII formula grammar"""

from typing import Dict, FrozenSet, Optional

import structlog
from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from ..common.exceptions import (
    ArityMismatchError,
    FormulaSyntaxError,
    MixedLanguageError,
    UndeclaredSymbolError,
)
from .formulas import (
    VARIABLE_NAME,
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
)

logger = structlog.get_logger(__name__)

# Implication is right-associative and binds loosest. Prefix operators, including the
# quantifiers, bind tightest: "forall x . P(x) -> Q" is "(forall x . P(x)) -> Q".
FORMULA_GRAMMAR = r"""
    ?start: formula

    ?formula: disjunction
            | disjunction "->" formula          -> imp

    ?disjunction: conjunction
                | disjunction "|" conjunction   -> or_

    ?conjunction: unary
                | conjunction "&" unary         -> and_

    ?unary: "~" unary                           -> neg
          | "[]" unary                          -> box
          | "<>" unary                          -> diamond
          | "forall" NAME "." unary             -> forall
          | "exists" NAME "." unary             -> exists
          | NAME "(" NAME ("," NAME)* ")"       -> pred
          | NAME                                -> prop
          | METAVAR                             -> meta
          | "(" formula ")"

    METAVAR: /\$[A-Z][A-Za-z0-9]*/
    NAME: /[A-Za-z][A-Za-z0-9]*/

    %import common.WS
    %ignore WS
"""

_PARSER = Lark(FORMULA_GRAMMAR, parser="lalr")


def parse(text: str, sig: Optional[Signature] = None) -> Formula:
    """
    Parse formula text into a tree with all sugar expanded.

    Args:
        text: Formula in the ASCII grammar.
        sig: Signature to check symbols against. When omitted, predicates take the arity
            of their first use and non-variable term names are read as constants.

    Returns:
        The formula tree.

    Raises:
        FormulaSyntaxError: On malformed text, undeclared symbols or arity mismatches.
    """
    return _FormulaBuilder(sig, allow_meta=False).build(_read(text), frozenset())


def parse_pattern(text: str) -> Formula:
    """Parse an axiom schema pattern; ``$A``-style metavariables are allowed."""
    return _FormulaBuilder(None, allow_meta=True).build(_read(text), frozenset())


def _read(text: str) -> Tree:
    try:
        return _PARSER.parse(text)
    except UnexpectedInput as e:
        if isinstance(e, UnexpectedCharacters):
            detail = f"unexpected character {e.char!r}"
        elif isinstance(e, UnexpectedToken) and e.token.type != "$END":
            detail = f"unexpected token {str(e.token)!r}"
        else:
            detail = "unexpected end of input"
        column = getattr(e, "column", None)
        position = column if isinstance(column, int) and column > 0 else None
        logger.debug("Formula rejected", text=text, detail=detail, position=position)
        raise FormulaSyntaxError(detail, position) from e


class _FormulaBuilder:
    """Turns a lark tree into formula nodes, resolving terms against the binders in scope."""

    def __init__(self, signature: Optional[Signature], allow_meta: bool):
        self.signature = signature
        self.allow_meta = allow_meta
        self.arities: Dict[str, int] = {}
        self.language: Optional[str] = None

    def build(self, tree: Tree, bound: FrozenSet[str]) -> Formula:
        kind = tree.data
        children = tree.children
        if kind == "imp":
            return Imp(self.build(children[0], bound), self.build(children[1], bound))
        if kind == "or_":
            return disjunction(self.build(children[0], bound), self.build(children[1], bound))
        if kind == "and_":
            return conjunction(self.build(children[0], bound), self.build(children[1], bound))
        if kind == "neg":
            return Neg(self.build(children[0], bound))
        if kind == "box":
            return Box(self.build(children[0], bound))
        if kind == "diamond":
            return diamond(self.build(children[0], bound))
        if kind in ("forall", "exists"):
            var_token = children[0]
            self._use_language("first-order", var_token)
            var = str(var_token)
            body = self.build(children[1], bound | {var})
            return Forall(var, body) if kind == "forall" else exists(var, body)
        if kind == "pred":
            return self._atom(children[0], children[1:], bound)
        if kind == "prop":
            self._use_language("propositional", children[0])
            return PropAtom(str(children[0]))
        if kind == "meta":
            token = children[0]
            if not self.allow_meta:
                raise FormulaSyntaxError("metavariables are only allowed in schemas", _col(token))
            return MetaVar(str(token)[1:])
        raise FormulaSyntaxError(f"unsupported construct {kind}")

    def _atom(self, name_token: Token, term_tokens: list, bound: FrozenSet[str]) -> Atom:
        self._use_language("first-order", name_token)
        name = str(name_token)
        arity = len(term_tokens)
        if self.signature is not None:
            if name not in self.signature.predicates:
                raise UndeclaredSymbolError(f"undeclared predicate {name}", _col(name_token))
            expected = self.signature.predicates[name]
        else:
            expected = self.arities.setdefault(name, arity)
        if expected != arity:
            raise ArityMismatchError(
                f"predicate {name} expects {expected} argument(s), got {arity}", _col(name_token)
            )
        return Atom(name, tuple(self._term(token, bound) for token in term_tokens))

    def _term(self, token: Token, bound: FrozenSet[str]) -> Term:
        name = str(token)
        if name in bound:
            return Var(name)
        if self.signature is not None and name in self.signature.constants:
            return Const(name)
        if VARIABLE_NAME.match(name):
            return Var(name)
        if self.signature is not None:
            raise UndeclaredSymbolError(f"undeclared constant {name}", _col(token))
        return Const(name)

    def _use_language(self, language: str, token: Token) -> None:
        if self.language is None:
            self.language = language
        elif self.language != language:
            raise MixedLanguageError(
                "propositional atoms cannot be mixed with predicates or quantifiers", _col(token)
            )


def _col(token: Token) -> Optional[int]:
    column = getattr(token, "column", None)
    return column if isinstance(column, int) else None
