"""Finite four-valued modal structures and bounded first-order validity"""

from .model_checker import (
    ClauseViolation,
    Countermodel,
    FOValuation,
    ValidUpTo,
    bounded_validity,
    count_structures,
    enumerate_structures,
    find_violation,
    instantiation_closure,
    legal_fo_valuations,
    verify_countermodel,
)
from .structures import FourValuedStructure

__all__ = [
    "ClauseViolation",
    "Countermodel",
    "FOValuation",
    "FourValuedStructure",
    "ValidUpTo",
    "bounded_validity",
    "count_structures",
    "enumerate_structures",
    "find_violation",
    "instantiation_closure",
    "legal_fo_valuations",
    "verify_countermodel",
]
