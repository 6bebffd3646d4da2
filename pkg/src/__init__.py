"""nmatrix-tableaux - Four-valued Nmatrix modal logic prover"""

__version__ = "0.1.0"
