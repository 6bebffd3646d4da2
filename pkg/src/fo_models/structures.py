"""Four-valued modal structures with their naming expansion"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Tuple

from ..semantics.values import TruthValue
from ..syntax.formulas import Atom, Const

PredicateTable = Dict[Tuple[str, ...], TruthValue]


@dataclass
class FourValuedStructure:
    """
    A finite domain with total predicate and constant interpretations.

    Elements not denoted by any constant get a name ``_<element>`` in the naming
    expansion, so every element is named by at least one constant.

    Attributes:
        domain: Element names, in order.
        predicates: Predicate name to a table from element tuples to values.
        constants: User constant to the element it denotes.
        arities: Predicate name to arity.
    """

    domain: Tuple[str, ...]
    predicates: Dict[str, PredicateTable]
    constants: Dict[str, str]
    arities: Dict[str, int]
    _naming: Dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.domain:
            raise ValueError("A structure needs a non-empty domain")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError("Domain elements must be distinct")
        for name, element in self.constants.items():
            if element not in self.domain:
                raise ValueError(f"Constant {name} denotes {element}, which is not in the domain")
        for name, arity in self.arities.items():
            table = self.predicates.get(name, {})
            missing = [cell for cell in product(self.domain, repeat=arity) if cell not in table]
            if missing:
                raise ValueError(f"Predicate {name} is undefined on {missing[0]}")
        named = set(self.constants.values())
        self._naming = dict(self.constants)
        for element in self.domain:
            if element not in named:
                self._naming[f"_{element}"] = element

    def names(self) -> List[str]:
        """User constants in declaration order, then names of the unnamed elements."""
        return list(self._naming)

    def denotation(self, constant: str) -> str:
        try:
            return self._naming[constant]
        except KeyError:
            raise ValueError(f"Constant {constant} is not interpreted by this structure") from None

    def atom_value(self, atom: Atom) -> TruthValue:
        if atom.predicate not in self.predicates:
            raise ValueError(f"Predicate {atom.predicate} is not interpreted by this structure")
        elements = []
        for arg in atom.args:
            if not isinstance(arg, Const):
                raise ValueError(f"Atom {atom.predicate} has a free variable {arg}")
            elements.append(self.denotation(arg.name))
        return self.predicates[atom.predicate][tuple(elements)]

    def to_dict(self) -> Dict[str, Any]:
        """Plain-data view used by the report models."""
        return {
            "domain": list(self.domain),
            "predicates": {
                name: {",".join(cell): str(value) for cell, value in table.items()}
                for name, table in sorted(self.predicates.items())
            },
            "constants": dict(self.constants),
        }
