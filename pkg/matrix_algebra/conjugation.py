"""Conjugation A -> G A G^-1 by matrices over the central subring."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from ring_core import Element, center_contains
from ring_core.errors import NonCentralMatrixError, NonInvertibleMatrixError
from matrix_algebra.matrix import Matrix

logger = logging.getLogger(__name__)


def _scalar_rows(g: Matrix) -> List[List[Fraction]]:
    rows: List[List[Fraction]] = []
    for i, row in enumerate(g.rows):
        out = []
        for j, e in enumerate(row):
            if not center_contains(e):
                raise NonCentralMatrixError(f"conjugator entry ({i + 1},{j + 1}) = {e} is not central")
            value = e.scalar_value()
            if value is None:
                raise NonInvertibleMatrixError(
                    f"conjugator entry ({i + 1},{j + 1}) = {e} is central but not a rational scalar; "
                    "only rational conjugators can be inverted"
                )
            out.append(value)
        rows.append(out)
    return rows


def invert_central(g: Matrix) -> Matrix:
    """Gauss-Jordan inverse of a rational-entry matrix, returned over g's ring."""
    x = _scalar_rows(g)
    n = g.n
    y = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    for i in range(n):
        pivot = next((r for r in range(i, n) if x[r][i] != 0), None)
        if pivot is None:
            raise NonInvertibleMatrixError("conjugator is singular")
        if pivot != i:
            x[i], x[pivot] = x[pivot], x[i]
            y[i], y[pivot] = y[pivot], y[i]
        scale = x[i][i]
        x[i] = [v / scale for v in x[i]]
        y[i] = [v / scale for v in y[i]]
        for r in range(n):
            if r != i and x[r][i] != 0:
                factor = x[r][i]
                x[r] = [a - factor * b for a, b in zip(x[r], x[i])]
                y[r] = [a - factor * b for a, b in zip(y[r], y[i])]

    return Matrix.from_scalars(g.ring, y)


def conjugate(a: Matrix, g: Matrix) -> Matrix:
    """G A G^-1 for a central, invertible G."""
    g_inv = invert_central(g)
    logger.debug("conjugating a %dx%d matrix over %s", a.n, a.n, a.ring.label)
    return g * a * g_inv
