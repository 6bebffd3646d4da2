"""Report schemas for proofs, semantic checks, derivations and fuzz runs"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class ProofNodeModel(BaseModel):
    """
    One tableau node.

    Nodes are stored in a flat list and refer to their children by id, so arbitrarily deep
    tableaux serialize without nesting.
    """

    id: int = Field(..., description="Position in depth-first order")
    sign: str = Field(..., description="T, t, f or F")
    formula: str = Field(..., description="Sentence in canonical form")
    mark: Optional[str] = Field(None, description="Constant of a marked formula")
    rule: Optional[str] = Field(None, description="Rule applied when the node was used")
    children: List[int] = Field(default_factory=list, description="Child node ids")
    closed: bool = Field(False, description="Leaf of a closed branch")
    finished: bool = Field(False, description="Leaf of an open finished branch")


class TableauModel(BaseModel):
    start: str
    outcome: str
    stages: int
    nodes: List[ProofNodeModel] = Field(default_factory=list)


class AssignmentModel(BaseModel):
    """Values of the subformulas of a propositional formula."""

    values: Dict[str, str] = Field(default_factory=dict)


class CountermodelModel(BaseModel):
    domain: List[str]
    predicates: Dict[str, Dict[str, str]]
    constants: Dict[str, str]
    valuation: Dict[str, str]


class ProofReport(BaseModel):
    logic: str
    first_order: bool
    premises: List[str] = Field(default_factory=list)
    formula: str
    target: str = Field(..., description="Premises folded into nested implications")
    status: str
    tableaux: List[TableauModel] = Field(default_factory=list)
    assignment: Optional[AssignmentModel] = None
    countermodel: Optional[CountermodelModel] = None


class CheckReport(BaseModel):
    logic: str
    first_order: bool
    formula: str
    valid: bool
    valid_up_to: Optional[int] = Field(None, description="Domain bound of a first-order check")
    assignments_checked: Optional[int] = None
    assignment: Optional[AssignmentModel] = None
    countermodel: Optional[CountermodelModel] = None


class HilbertReport(BaseModel):
    logic: str
    first_order: bool
    premises: List[str] = Field(default_factory=list)
    conclusion: str
    accepted: bool
    step: Optional[int] = None
    reason: Optional[str] = None
    detail: str = ""
    axioms: Dict[int, str] = Field(default_factory=dict, description="Schema used at each axiom step")


class FuzzMismatch(BaseModel):
    index: int
    logic: str
    formula: str
    tableau: str
    oracle: str


class FuzzReport(BaseModel):
    logics: List[str]
    formulas: int
    seed: Optional[int] = None
    counts: Dict[str, Dict[str, int]] = Field(
        default_factory=dict, description="Per logic, the number of valid and invalid formulas"
    )
    mismatches: List[FuzzMismatch] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches
