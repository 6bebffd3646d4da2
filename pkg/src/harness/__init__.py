"""Formula generators and the tableau/oracle agreement harness"""

from .fuzz import run_agreement
from .generators import atom_names, enumerate_formulas, random_corpus, random_formula

__all__ = ["atom_names", "enumerate_formulas", "random_corpus", "random_formula", "run_agreement"]
