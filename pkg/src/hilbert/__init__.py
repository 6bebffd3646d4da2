"""Hilbert calculi: axiom schemas, derivation files and the derivation checker"""

from .checker import DerivationVerdict, RejectReason, check_derivation
from .derivation import (
    AxiomRef,
    Derivation,
    DerivationStep,
    Generalization,
    ModusPonens,
    Premise,
    parse_derivation,
)
from .schemas import (
    AxiomCatalogue,
    AxiomSchema,
    LogicAxiomSet,
    SchemaMatch,
    instantiate,
    load_catalogue,
    match_axiom,
)

__all__ = [
    "AxiomCatalogue",
    "AxiomRef",
    "AxiomSchema",
    "Derivation",
    "DerivationStep",
    "DerivationVerdict",
    "Generalization",
    "LogicAxiomSet",
    "ModusPonens",
    "Premise",
    "RejectReason",
    "SchemaMatch",
    "check_derivation",
    "instantiate",
    "load_catalogue",
    "match_axiom",
    "parse_derivation",
]
