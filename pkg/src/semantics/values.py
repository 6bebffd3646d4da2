"""Truth values, value sets and logic identifiers"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Tuple


class TruthValue(str, Enum):
    """
    The four values: necessarily true, contingently true, contingently false, impossible.

    Definition order (T, t, f, F) is the enumeration order used everywhere values are
    tried in turn; ``rank`` gives the chain order F < f < t < T.
    """

    T = "T"
    t = "t"
    f = "f"
    F = "F"

    def __str__(self) -> str:
        return self.value

    @property
    def rank(self) -> int:
        return _RANK[self]

    @property
    def designated(self) -> bool:
        return self in (TruthValue.T, TruthValue.t)


_RANK = {TruthValue.F: 0, TruthValue.f: 1, TruthValue.t: 2, TruthValue.T: 3}
_BIT = {TruthValue.T: 1, TruthValue.t: 2, TruthValue.f: 4, TruthValue.F: 8}

VALUE_ORDER: Tuple[TruthValue, ...] = (TruthValue.T, TruthValue.t, TruthValue.f, TruthValue.F)


@dataclass(frozen=True)
class ValueSet:
    """Non-empty set of truth values stored as a 4-bit mask (T=1, t=2, f=4, F=8)."""

    mask: int

    def __post_init__(self) -> None:
        if not 0 < self.mask < 16:
            raise ValueError(f"A value set must be a non-empty subset of 4 values: {self.mask}")

    @classmethod
    def of(cls, *values: TruthValue) -> "ValueSet":
        return cls.from_values(values)

    @classmethod
    def from_values(cls, values: Iterable[TruthValue]) -> "ValueSet":
        mask = 0
        for value in values:
            mask |= _BIT[value]
        return cls(mask)

    @classmethod
    def all_nonempty(cls) -> List["ValueSet"]:
        return [cls(mask) for mask in range(1, 16)]

    def __iter__(self) -> Iterator[TruthValue]:
        return (value for value in VALUE_ORDER if self.mask & _BIT[value])

    def __contains__(self, value: object) -> bool:
        return isinstance(value, TruthValue) and bool(self.mask & _BIT[value])

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        return "{" + ",".join(str(value) for value in self) + "}"

    def issubset(self, other: "ValueSet") -> bool:
        return self.mask & ~other.mask == 0

    def intersects(self, other: "ValueSet") -> bool:
        return bool(self.mask & other.mask)


class LogicId(str, Enum):
    """The three propositional systems; first-order use is a separate flag."""

    TM = "tm"
    S4M = "s4m"
    S5M = "s5m"

    def __str__(self) -> str:
        return self.value

    @property
    def display_name(self) -> str:
        return {"tm": "Tm", "s4m": "S4m", "s5m": "S5m"}[self.value]

    @classmethod
    def parse(cls, text: str) -> "LogicId":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown logic {text!r}; expected one of tm, s4m, s5m") from None


DESIGNATED = ValueSet.of(TruthValue.T, TruthValue.t)
NON_DESIGNATED = ValueSet.of(TruthValue.f, TruthValue.F)
