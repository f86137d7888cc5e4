"""
Symmetric characteristic polynomial and the two-sided matrix decomposition.

p(x) = sdet(xI - A) is computed by running the preadjoint over M_n(R[x]) with
XPoly entries, so x stays central and the coefficients lambda_i are read off
directly. The decomposition then writes

    n (xI - A)(xI - A)* = p(x) I + C_0 + C_1 x + ... + C_n x^n
    n (xI - A)*(xI - A) = p(x) I + D_0 + D_1 x + ... + D_n x^n

and C_i, D_i are the residual x-coefficients.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

from ring_core import Element, is_in_commutator_subgroup
from ring_core.errors import InvariantViolation
from matrix_algebra import CentralPoly, Matrix, XPoly, cpoly_mul, x_identity_minus, xpoly_sum
from charpoly_engine.preadjoint import preadjoint_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharPolyResult:
    """lambda_0..lambda_n together with C_0..C_n and D_0..D_n."""

    matrix: Matrix
    lambdas: Tuple[Element, ...]
    c_matrices: Tuple[Matrix, ...]
    d_matrices: Tuple[Matrix, ...]

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def polynomial(self) -> XPoly:
        return XPoly(self.matrix.ring, self.lambdas)

    def leading_is_factorial(self) -> bool:
        return self.lambdas[-1] == Element.scalar(self.matrix.ring, math.factorial(self.n))

    def commutator_entries_ok(self) -> bool:
        return all(
            is_in_commutator_subgroup(e)
            for m in self.c_matrices + self.d_matrices
            for e in m.entries()
        )


def _central_preadjoint(a: Matrix) -> Tuple[CentralPoly, List[List[XPoly]], List[List[XPoly]]]:
    ring = a.ring
    x_minus_a = x_identity_minus(a)
    grid = x_minus_a.entry_grid()
    star_grid = preadjoint_grid(grid, XPoly.one(ring), XPoly.zero(ring))
    return x_minus_a, grid, star_grid


def _check_lambdas(a: Matrix, lambdas: List[Element]) -> None:
    expected = Element.scalar(a.ring, math.factorial(a.n))
    if len(lambdas) != a.n + 1 or lambdas[-1] != expected:
        raise InvariantViolation(
            f"leading coefficient of p(x) is {lambdas[-1] if lambdas else 0}, expected {a.n}!"
        )


def symmetric_charpoly(a: Matrix) -> Tuple[Element, ...]:
    """(lambda_0, ..., lambda_n) with p(x) = tr((xI - A)* (xI - A))."""
    _, grid, star_grid = _central_preadjoint(a)
    n = a.n
    p = xpoly_sum(a.ring, (star_grid[r][s] * grid[s][r] for r in range(n) for s in range(n)))
    lambdas = p.padded(n + 1) if p.degree <= n else list(p.coeffs)
    _check_lambdas(a, lambdas)
    return tuple(lambdas)


def decompose_thm22(a: Matrix) -> CharPolyResult:
    """lambda_i, C_i and D_i for A; every CharPolyResult invariant is checked before returning."""
    ring, n = a.ring, a.n
    x_minus_a, grid, star_grid = _central_preadjoint(a)
    star = CentralPoly.from_entries(ring, star_grid)

    right = cpoly_mul(x_minus_a, star)
    left = cpoly_mul(star, x_minus_a)
    p_right, p_left = right.trace(), left.trace()
    if p_right != p_left:
        raise InvariantViolation("tr((xI-A)(xI-A)*) differs from tr((xI-A)*(xI-A))")
    if right.degree > n or left.degree > n:
        raise InvariantViolation("(xI-A)(xI-A)* has degree above n")

    lambdas = p_left.padded(n + 1)
    _check_lambdas(a, lambdas)

    c_mats = tuple((right.coefficient(d) * n) - Matrix.scalar(ring, n, lambdas[d]) for d in range(n + 1))
    d_mats = tuple((left.coefficient(d) * n) - Matrix.scalar(ring, n, lambdas[d]) for d in range(n + 1))
    result = CharPolyResult(a, tuple(lambdas), c_mats, d_mats)

    if not result.commutator_entries_ok():
        raise InvariantViolation("an entry of some C_i or D_i lies outside [R,R]")
    logger.debug(
        "decomposed %dx%d matrix over %s: lambda terms %s",
        n, n, ring.label, [len(l) for l in lambdas],
    )
    return result


