"""Hintikka checks and countermodel extraction from open finished branches"""

from .extraction import extract_fo_countermodel, extract_prop_countermodel
from .hintikka import HintikkaReport, HintikkaViolation, check_hintikka

__all__ = [
    "HintikkaReport",
    "HintikkaViolation",
    "check_hintikka",
    "extract_fo_countermodel",
    "extract_prop_countermodel",
]
