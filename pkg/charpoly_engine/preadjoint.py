"""
The preadjoint A* of a square matrix over a noncommutative ring.

    a*_{r,s} = sum over tau, rho in S_n with tau(s) = s, rho(s) = r of
               sgn(rho) * a_{tau(1),rho(tau(1))} ... (position s omitted) ... a_{tau(n),rho(tau(n))}

Factors are multiplied in tau's order. Column s is produced by pairing every tau
fixing s with every rho in S_n; rho(s) picks the row r the term lands in.
"""

from __future__ import annotations

import functools
import logging
import operator
from typing import List, Sequence, TypeVar

from ring_core import Element
from ring_core.errors import InvariantViolation
from matrix_algebra import Matrix
from charpoly_engine.permutations import fixing, permutations, preadjoint_pairs_per_column, sign

logger = logging.getLogger(__name__)

T = TypeVar("T")


def preadjoint_grid(grid: Sequence[Sequence[T]], one: T, zero: T) -> List[List[T]]:
    """Preadjoint of an n x n grid whose entries support +, - and * (Elements or XPoly)."""
    n = len(grid)
    terms: List[List[List[T]]] = [[[] for _ in range(n)] for _ in range(n)]
    all_rho = permutations(n)
    expected = preadjoint_pairs_per_column(n)

    for s in range(1, n + 1):
        pairs = 0
        for tau in fixing(n, s):
            rows = [tau[k] for k in range(n) if k != s - 1]
            for rho in all_rho:
                term = one
                for i in rows:
                    term = term * grid[i - 1][rho[i - 1] - 1]
                r = rho[s - 1]
                terms[r - 1][s - 1].append(term if sign(rho) > 0 else -term)
                pairs += 1
        if pairs != expected:
            raise InvariantViolation(f"column {s}: enumerated {pairs} permutation pairs, expected {expected}")
        logger.debug("preadjoint column %d: %d (tau, rho) pairs", s, pairs)

    return [[functools.reduce(operator.add, cell, zero) for cell in row] for row in terms]


def preadjoint(a: Matrix) -> Matrix:
    """A* over the ring of A; the 1x1 preadjoint is [1]."""
    ring = a.ring
    grid = preadjoint_grid(a.rows, Element.one(ring), Element.zero(ring))
    return Matrix(ring, grid)
