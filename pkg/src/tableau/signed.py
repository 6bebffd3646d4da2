"""Signed and marked signed formulas"""

from dataclasses import dataclass
from typing import Tuple, Union

from ..semantics.values import TruthValue
from ..syntax.canonical import canonicalize
from ..syntax.formulas import Atom, Const, Forall, Formula, PropAtom
from ..syntax.operations import constants_of, is_sentence, substitute
from ..syntax.printer import to_text


@dataclass(frozen=True)
class SignedFormula:
    """``sign:sentence`` with the sentence in canonical form."""

    sign: TruthValue
    sentence: Formula

    @classmethod
    def of(cls, sign: TruthValue, sentence: Formula) -> "SignedFormula":
        if not is_sentence(sentence):
            raise ValueError(f"Signed formulas need sentences: {to_text(sentence)}")
        return cls(TruthValue(sign), canonicalize(sentence))

    @property
    def is_atomic(self) -> bool:
        return isinstance(self.sentence, (Atom, PropAtom))

    def constants(self) -> Tuple[str, ...]:
        return constants_of(self.sentence)

    def __str__(self) -> str:
        return f"{self.sign}:{to_text(self.sentence)}"


@dataclass(frozen=True)
class MarkedSignedFormula:
    """Reusable ``t:forall x . psi:[c]`` or ``f:forall x . psi:[c]``; ``c`` was used first."""

    sign: TruthValue
    sentence: Forall
    mark: str

    def __post_init__(self) -> None:
        if self.sign not in (TruthValue.t, TruthValue.f):
            raise ValueError(f"Only t and f universal formulas are marked, got {self.sign}")
        if not isinstance(self.sentence, Forall):
            raise ValueError("Marked formulas must be universally quantified")

    @property
    def is_atomic(self) -> bool:
        return False

    def constants(self) -> Tuple[str, ...]:
        names = constants_of(self.sentence)
        return names if self.mark in names else names + (self.mark,)

    def __str__(self) -> str:
        return f"{self.sign}:{to_text(self.sentence)}:[{self.mark}]"


Expression = Union[SignedFormula, MarkedSignedFormula]


def instance(sentence: Forall, constant: str) -> Formula:
    """Canonical form of the body with the bound variable replaced by ``constant``."""
    return canonicalize(substitute(sentence.body, sentence.var, Const(constant)))
