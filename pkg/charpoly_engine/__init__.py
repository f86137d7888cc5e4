"""Preadjoint, left/right/symmetric determinants and the symmetric characteristic polynomial."""

from charpoly_engine.charpoly import CharPolyResult, decompose_thm22, symmetric_charpoly
from charpoly_engine.classical_oracle import classical_adjugate, classical_charpoly, classical_det
from charpoly_engine.determinants import ldet, rdet, sdet
from charpoly_engine.permutations import (
    fixing,
    is_permutation,
    permutations,
    preadjoint_pairs_per_column,
    sign,
    starred_pairs,
)
from charpoly_engine.preadjoint import preadjoint, preadjoint_grid

__all__ = [
    "CharPolyResult",
    "classical_adjugate",
    "classical_charpoly",
    "classical_det",
    "decompose_thm22",
    "fixing",
    "is_permutation",
    "ldet",
    "permutations",
    "preadjoint",
    "preadjoint_grid",
    "preadjoint_pairs_per_column",
    "rdet",
    "sdet",
    "sign",
    "starred_pairs",
]
