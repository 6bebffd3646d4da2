"""Four-valued Nmatrix semantics"""

from .nmatrix import (
    allowed_values,
    box_op,
    exists_op,
    forall_op,
    imp_op,
    is_designated,
    neg_op,
    negate,
)
from .values import DESIGNATED, NON_DESIGNATED, VALUE_ORDER, LogicId, TruthValue, ValueSet

__all__ = [
    "DESIGNATED",
    "NON_DESIGNATED",
    "VALUE_ORDER",
    "LogicId",
    "TruthValue",
    "ValueSet",
    "allowed_values",
    "box_op",
    "exists_op",
    "forall_op",
    "imp_op",
    "is_designated",
    "neg_op",
    "negate",
]
