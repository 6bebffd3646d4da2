"""Tableau nodes and root-to-leaf branches"""

from itertools import count
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..semantics.values import LogicId, TruthValue
from ..syntax.formulas import Forall, Formula, fresh_constant, is_fresh_constant
from .signed import Expression, MarkedSignedFormula, SignedFormula, instance

_serials = count()


class TableauNode:
    """
    One expression occurrence in a tableau.

    ``path`` holds the child indices from the root; ``(depth, path)`` orders nodes by level
    and then left to right. ``used`` never goes back to False once set.
    """

    __slots__ = (
        "expression",
        "parent",
        "children",
        "depth",
        "path",
        "used",
        "rule",
        "closed",
        "finished",
        "constants",
        "serial",
        "created_stage",
        "used_stage",
    )

    def __init__(
        self,
        expression: Expression,
        parent: Optional["TableauNode"] = None,
        index: int = 0,
        stage: int = 0,
    ):
        self.expression = expression
        self.parent = parent
        self.children: List["TableauNode"] = []
        self.depth = parent.depth + 1 if parent is not None else 0
        self.path: Tuple[int, ...] = parent.path + (index,) if parent is not None else ()
        self.used = False
        self.rule: Optional[str] = None
        self.closed = False
        self.finished = False
        self.constants = expression.constants()
        self.serial = next(_serials)
        self.created_stage = stage
        self.used_stage: Optional[int] = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.depth, self.path)

    def ancestry(self) -> List["TableauNode"]:
        """Nodes from the root down to this node."""
        nodes = []
        node: Optional[TableauNode] = self
        while node is not None:
            nodes.append(node)
            node = node.parent
        nodes.reverse()
        return nodes

    def __repr__(self) -> str:
        return f"TableauNode({self.expression}, depth={self.depth}, used={self.used})"


def constant_sequence(user_constants: Sequence[str]) -> Iterator[str]:
    """User constants in order, then the fresh pool _k1, _k2, ..."""
    yield from user_constants
    index = 1
    while True:
        yield fresh_constant(index)
        index += 1


class Branch:
    """
    A root-to-leaf node list together with the constants that appear on it.

    Signed formulas are indexed by canonical sentence so that closure and membership
    are equality tests.
    """

    def __init__(
        self,
        nodes: Sequence[TableauNode],
        logic: LogicId = LogicId.TM,
        user_constants: Sequence[str] = (),
    ):
        self.nodes: Tuple[TableauNode, ...] = tuple(nodes)
        self.logic = LogicId(logic)
        self.user_constants: Tuple[str, ...] = tuple(user_constants)
        self._signs: Dict[Formula, Set[TruthValue]] = {}
        seen: Dict[str, None] = {}
        for node in self.nodes:
            expression = node.expression
            if isinstance(expression, SignedFormula):
                self._signs.setdefault(expression.sentence, set()).add(expression.sign)
            for name in node.constants:
                seen.setdefault(name, None)
        self.constants: FrozenSet[str] = frozenset(seen)

    @classmethod
    def from_expressions(
        cls,
        expressions: Iterable[Expression],
        logic: LogicId = LogicId.TM,
        user_constants: Optional[Sequence[str]] = None,
        used: bool = True,
    ) -> "Branch":
        """Build a detached branch; non-atomic nodes are flagged ``used`` as requested."""
        nodes: List[TableauNode] = []
        parent: Optional[TableauNode] = None
        for expression in expressions:
            node = TableauNode(expression, parent)
            node.used = used and not expression.is_atomic
            if parent is not None:
                parent.children.append(node)
            nodes.append(node)
            parent = node
        if user_constants is None:
            user_constants = [c for c in nodes[0].constants if not is_fresh_constant(c)] if nodes else []
        return cls(nodes, logic, user_constants)

    @property
    def expressions(self) -> List[Expression]:
        return [node.expression for node in self.nodes]

    @property
    def signed_formulas(self) -> List[SignedFormula]:
        return [e for e in self.expressions if isinstance(e, SignedFormula)]

    @property
    def leaf(self) -> TableauNode:
        return self.nodes[-1]

    @property
    def root(self) -> TableauNode:
        return self.nodes[0]

    def contains(self, sign: TruthValue, sentence: Formula) -> bool:
        return sign in self._signs.get(sentence, ())

    def signs_of(self, sentence: Formula) -> FrozenSet[TruthValue]:
        return frozenset(self._signs.get(sentence, ()))

    @property
    def closed(self) -> bool:
        return any(len(signs) > 1 for signs in self._signs.values())

    def fresh_constant(self) -> str:
        """First constant in the global order that has not appeared on this branch."""
        return self.first_constant(lambda name: name not in self.constants)

    def first_constant(self, accept: Callable[[str], bool], exclude: Optional[str] = None) -> str:
        for name in constant_sequence(self.user_constants):
            if name != exclude and accept(name):
                return name
        raise AssertionError("constant sequence is infinite")

    def universe(self) -> List[str]:
        """Constants on the branch: user constants first, then the rest in pool order."""
        ordered = [c for c in self.user_constants if c in self.constants]
        rest = sorted(
            (c for c in self.constants if c not in self.user_constants),
            key=lambda c: (0, int(c[2:]), "") if is_fresh_constant(c) else (1, 0, c),
        )
        return ordered + rest

    def is_finished(self) -> bool:
        """
        True when nothing on this branch still needs expanding.

        Non-reusable expressions must have been used. Reusable ones (T-universal formulas
        and marked formulas) must already hold for every constant on the branch.
        """
        if self.closed:
            return False
        for node in self.nodes:
            expression = node.expression
            if expression.is_atomic:
                continue
            if isinstance(expression, MarkedSignedFormula):
                if not self._marked_saturated(expression):
                    return False
            elif expression.sign == TruthValue.T and isinstance(expression.sentence, Forall):
                if not self._universal_saturated(expression.sentence, node.used):
                    return False
            elif not node.used:
                return False
        return True

    def _universal_saturated(self, sentence: Forall, used: bool) -> bool:
        if not self.constants and not used:
            return False
        return all(self.contains(TruthValue.T, instance(sentence, c)) for c in self.constants)

    def _marked_saturated(self, marked: MarkedSignedFormula) -> bool:
        if marked.sign == TruthValue.t:
            accepted = (TruthValue.T, TruthValue.t)
        else:
            accepted = (TruthValue.T, TruthValue.t, TruthValue.f)
        for name in self.constants:
            if name == marked.mark:
                continue
            signs = self.signs_of(instance(marked.sentence, name))
            if not any(sign in signs for sign in accepted):
                return False
        return True


def is_branch_closed(branch: Branch) -> bool:
    """True iff two signed formulas on the branch are variants with different signs."""
    return branch.closed
