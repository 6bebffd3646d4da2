"""Line-oriented derivation files: ``n. <formula> ; premise | axiom <name> | mp j,k | gen j x``"""

import re
from dataclasses import dataclass
from typing import List, Optional, Union

from ..common.exceptions import DerivationFormatError, FormulaSyntaxError
from ..syntax.formulas import Formula, Signature
from ..syntax.parser import parse

_STEP = re.compile(r"^\s*(\d+)\s*\.\s*(.+?)\s*;\s*(.+?)\s*$")
_AXIOM = re.compile(r"^axiom\s+([A-Za-z0-9]+)$")
_MP = re.compile(r"^mp\s+(\d+)\s*,\s*(\d+)$")
_GEN = re.compile(r"^gen\s+(\d+)\s+([A-Za-z][A-Za-z0-9]*)$")


@dataclass(frozen=True)
class Premise:
    pass


@dataclass(frozen=True)
class AxiomRef:
    name: str


@dataclass(frozen=True)
class ModusPonens:
    """``minor`` holds φ and ``major`` holds φ → ψ."""

    minor: int
    major: int


@dataclass(frozen=True)
class Generalization:
    step: int
    variable: str


Justification = Union[Premise, AxiomRef, ModusPonens, Generalization]


@dataclass(frozen=True)
class DerivationStep:
    number: int
    formula: Formula
    justification: Justification
    line: Optional[int] = None


@dataclass(frozen=True)
class Derivation:
    steps: tuple

    @property
    def conclusion(self) -> Formula:
        return self.steps[-1].formula

    def __len__(self) -> int:
        return len(self.steps)


def parse_justification(text: str, line: Optional[int] = None) -> Justification:
    text = " ".join(text.split())
    if text == "premise":
        return Premise()
    match = _AXIOM.match(text)
    if match:
        return AxiomRef(match.group(1))
    match = _MP.match(text)
    if match:
        return ModusPonens(int(match.group(1)), int(match.group(2)))
    match = _GEN.match(text)
    if match:
        return Generalization(int(match.group(1)), match.group(2))
    raise DerivationFormatError(f"unknown justification {text!r}", line)


def parse_derivation(text: str, sig: Optional[Signature] = None) -> Derivation:
    """
    Read a derivation.

    Blank lines and ``#`` comments are skipped. Steps must be numbered 1, 2, ... in order.

    Raises:
        DerivationFormatError: On malformed lines, numbering gaps or unreadable formulas.
    """
    steps: List[DerivationStep] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        match = _STEP.match(content)
        if not match:
            raise DerivationFormatError("expected 'n. formula ; justification'", line_number)
        number = int(match.group(1))
        if number != len(steps) + 1:
            raise DerivationFormatError(f"expected step {len(steps) + 1}, got {number}", line_number)
        try:
            formula = parse(match.group(2), sig)
        except FormulaSyntaxError as e:
            raise DerivationFormatError(str(e), line_number) from e
        justification = parse_justification(match.group(3), line_number)
        steps.append(DerivationStep(number, formula, justification, line_number))
    if not steps:
        raise DerivationFormatError("derivation has no steps")
    return Derivation(tuple(steps))
