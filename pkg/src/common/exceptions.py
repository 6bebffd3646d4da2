"""Custom exceptions for nmatrix-tableaux"""

from typing import Any, Dict, Optional


class NmatrixTableauxError(Exception):
    """
    Base exception for all library errors.

    This serves as the root exception class so callers can catch every internal error.
    """

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)


class FormulaSyntaxError(NmatrixTableauxError):
    """
    Formula text could not be read.

    Raised by the parser on malformed input. ``position`` is the 1-based column of the
    offending token when it is known.
    """

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        text = message if position is None else f"{message} (column {position})"
        super().__init__(text, {"position": position} if position is not None else None)
        self.message = message


class UndeclaredSymbolError(FormulaSyntaxError):
    """
    Undeclared symbol.

    Raised when a predicate or constant is used that the signature does not declare.
    """
    pass


class ArityMismatchError(FormulaSyntaxError):
    """
    Arity mismatch.

    Raised when a predicate is applied to a number of terms other than its arity.
    """
    pass


class MixedLanguageError(FormulaSyntaxError):
    """
    Propositional atoms mixed with first-order syntax.

    A formula is either propositional (PropAtom only) or first-order (Atom/Forall only).
    """
    pass


class SubstitutionCaptureError(NmatrixTableauxError):
    """
    Substitution would capture a variable.

    Raised when a term is not free for the variable it replaces.
    """
    pass


class NoRuleApplicableError(NmatrixTableauxError):
    """
    No tableau rule applies.

    Raised by rule expansion on atomic signed formulas; callers skip such nodes.
    """
    pass


class ResourceCapExceededError(NmatrixTableauxError):
    """
    Configured resource cap exceeded.

    Raised when the oracle's subformula DAG or the bounded structure search is too large.
    """
    pass


class BranchNotFinishedError(NmatrixTableauxError):
    """
    Branch is not finished.

    Raised when a countermodel is requested from a branch that still has work left.
    """
    pass


class CountermodelError(NmatrixTableauxError):
    """
    Countermodel construction failed.

    Raised when an extracted assignment or structure violates the valuation clauses.
    """
    pass


class DerivationFormatError(NmatrixTableauxError):
    """
    Malformed derivation text.

    Raised while reading the line-oriented Hilbert derivation format.
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        text = message if line is None else f"line {line}: {message}"
        super().__init__(text, {"line": line} if line is not None else None)


class ConfigurationError(NmatrixTableauxError):
    """
    Configuration error.

    Raised when settings or the axiom catalogue are missing or invalid.
    """
    pass
