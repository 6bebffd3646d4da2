"""
Stage-by-stage tableau construction.

Each stage selects the unused expression of minimal level (leftmost among equals) that
still lies on an open branch, extends every open branch through it, and marks it used.
Propositional saturation and the first-order systematic procedure share this loop; they
differ only in the rules that fire and in the stage budget.
"""

import heapq
from dataclasses import dataclass
from enum import Enum
from itertools import count
from typing import List, Optional, Sequence, Tuple

import structlog

from ..common.config import settings
from ..semantics.values import LogicId
from ..syntax.formulas import is_fresh_constant
from ..syntax.operations import constants_of, is_propositional
from ..syntax.printer import to_text
from .rules import expand
from .signed import SignedFormula
from .tree import Branch, TableauNode

logger = structlog.get_logger(__name__)


class Outcome(str, Enum):
    CLOSED = "closed"
    OPEN_FINISHED = "open-finished"
    EXHAUSTED = "exhausted"


class Tableau:
    """
    A growing tableau for one starting signed formula.

    Attributes:
        logic: Logic whose rules are applied.
        root: Root node holding the starting signed formula.
        user_constants: Constants of the root, first in the constant order.
        stages: Number of expressions used so far.
        selection_depths: Depth of the node used at each stage, in stage order.
        fresh_log: For every fresh-constant rule use, the constant and the constants that
            were already on the extended branch.
    """

    def __init__(
        self,
        logic: LogicId,
        start: SignedFormula,
        user_constants: Optional[Sequence[str]] = None,
    ):
        self.logic = LogicId(logic)
        self.start = start
        self.root = TableauNode(start)
        if user_constants is None:
            user_constants = [c for c in constants_of(start.sentence) if not is_fresh_constant(c)]
        self.user_constants: Tuple[str, ...] = tuple(user_constants)
        self.stages = 0
        self.selection_depths: List[int] = []
        self.fresh_log: List[Tuple[str, frozenset]] = []
        self.open_finished: Optional[TableauNode] = None
        self._open_leaves = 1
        self._queue: List[Tuple[int, Tuple[int, ...], int, TableauNode]] = []
        self._tiebreak = count()
        self._enqueue(self.root)
        self._settle(self.root)

    def branch(self, leaf: TableauNode) -> Branch:
        return Branch(leaf.ancestry(), self.logic, self.user_constants)

    @property
    def closed(self) -> bool:
        return self._open_leaves == 0

    def leaves(self) -> List[TableauNode]:
        """All leaves, left to right."""
        found = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                found.append(node)
            else:
                stack.extend(reversed(node.children))
        return found

    def nodes(self) -> List[TableauNode]:
        """All nodes in depth-first, left-to-right order."""
        found = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            found.append(node)
            stack.extend(reversed(node.children))
        return found

    def run(self, budget: Optional[int] = None) -> Outcome:
        """Advance stage by stage until closed, open and finished, or out of budget."""
        while True:
            if self.open_finished is not None:
                return Outcome.OPEN_FINISHED
            if self.closed:
                return Outcome.CLOSED
            if budget is not None and self.stages >= budget:
                return Outcome.EXHAUSTED
            if not self.step():
                # Nothing left to use: every open leaf was settled as finished.
                return Outcome.OPEN_FINISHED if self.open_finished else Outcome.CLOSED

    def step(self) -> bool:
        """Run one stage. Returns False when no unused expression lies on an open branch."""
        while self._queue:
            _, _, _, node = heapq.heappop(self._queue)
            leaves = self._open_leaves_below(node)
            if leaves:
                self._use(node, leaves)
                return True
        return False

    def _enqueue(self, node: TableauNode) -> None:
        if not node.expression.is_atomic:
            heapq.heappush(self._queue, (node.depth, node.path, next(self._tiebreak), node))

    def _open_leaves_below(self, node: TableauNode) -> List[TableauNode]:
        found = []
        stack = [node]
        while stack:
            current = stack.pop()
            if current.is_leaf:
                if not current.closed:
                    found.append(current)
            else:
                stack.extend(reversed(current.children))
        return found

    def _use(self, node: TableauNode, leaves: List[TableauNode]) -> None:
        self.stages += 1
        node.used = True
        node.used_stage = self.stages
        self.selection_depths.append(node.depth)
        for leaf in leaves:
            branch = self.branch(leaf)
            application = expand(self.logic, node.expression, branch)
            node.rule = application.rule
            if application.fresh is not None:
                self.fresh_log.append((application.fresh, branch.constants))
            if application.closes:
                leaf.closed = True
                self._open_leaves -= 1
                continue
            self._open_leaves -= 1
            for index, extension in enumerate(application.extensions):
                parent = leaf
                for position, expression in enumerate(extension):
                    child = TableauNode(
                        expression, parent, index if position == 0 else 0, self.stages
                    )
                    parent.children.append(child)
                    self._enqueue(child)
                    parent = child
                self._open_leaves += 1
                self._settle(parent)

    def _settle(self, leaf: TableauNode) -> None:
        """Flag a new leaf as closed or as open and finished."""
        branch = self.branch(leaf)
        if branch.closed:
            leaf.closed = True
            self._open_leaves -= 1
        elif branch.is_finished():
            leaf.finished = True
            if self.open_finished is None:
                self.open_finished = leaf


@dataclass
class SearchResult:
    """Outcome of one tableau search with the open finished branch when there is one."""

    outcome: Outcome
    tableau: Tableau
    open_branch: Optional[Branch] = None

    @property
    def stages(self) -> int:
        return self.tableau.stages

    @property
    def start(self) -> SignedFormula:
        return self.tableau.start


def _search(tableau: Tableau, budget: Optional[int]) -> SearchResult:
    outcome = tableau.run(budget)
    open_branch = None
    if outcome == Outcome.OPEN_FINISHED and tableau.open_finished is not None:
        open_branch = tableau.branch(tableau.open_finished)
    logger.info(
        "Tableau search finished",
        logic=str(tableau.logic),
        start=str(tableau.start),
        outcome=outcome.value,
        stages=tableau.stages,
    )
    return SearchResult(outcome, tableau, open_branch)


def saturate_prop(logic: LogicId, start: SignedFormula) -> SearchResult:
    """
    Expand a propositional tableau until it closes or a branch is saturated and open.

    Terminates without a budget: every consequence of a rule is less complex than its
    premise.
    """
    if not is_propositional(start.sentence):
        raise ValueError(f"saturate_prop needs a propositional sentence: {to_text(start.sentence)}")
    return _search(Tableau(logic, start), None)


def run_systematic(
    logic: LogicId,
    start: SignedFormula,
    budget: Optional[int] = None,
    user_constants: Optional[Sequence[str]] = None,
) -> SearchResult:
    """
    Run the systematic first-order procedure for at most ``budget`` stages.

    Returns ``CLOSED``, ``OPEN_FINISHED`` with the first branch finished over its own
    constants, or ``EXHAUSTED``.
    """
    budget = budget if budget is not None else settings.stage_budget
    if budget < 1:
        raise ValueError("budget must be at least 1")
    return _search(Tableau(logic, start, user_constants), budget)
