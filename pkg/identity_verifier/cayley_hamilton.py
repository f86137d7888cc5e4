"""
Cayley-Hamilton style identities built on the symmetric characteristic polynomial.

- right/left identities: sum A^i (lambda_i I + C_i) = 0 and sum (lambda_i I + D_i) A^i = 0
- sandwich identity: sum_{i,j} A^i (lambda_i lambda_j) A^j, zero when [x,y][u,v] = 0 holds in R
- sandwich pivot: the same sum equals sum_{i,j} A^i C_i D_j A^j over every ring
- invariance of lambda_i under conjugation by central invertible matrices
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from ring_core import Element, RingDescriptor
from matrix_algebra import Matrix, conjugate, random_matrix
from charpoly_engine import CharPolyResult, decompose_thm22, symmetric_charpoly
from identity_verifier.report import VerificationReport

logger = logging.getLogger(__name__)


def _base_stats(a: Matrix) -> dict:
    return {"n": a.n, "ring": a.ring.label}


def verify_thm22(a: Matrix, result: Optional[CharPolyResult] = None) -> VerificationReport:
    result = result or decompose_thm22(a)
    ring, n = a.ring, a.n
    powers = a.powers(n)

    right = Matrix.zero(ring, n)
    left = Matrix.zero(ring, n)
    for i in range(n + 1):
        lam = Matrix.scalar(ring, n, result.lambdas[i])
        right = right + powers[i] * (lam + result.c_matrices[i])
        left = left + (lam + result.d_matrices[i]) * powers[i]

    failures = []
    if not result.leading_is_factorial():
        failures.append(f"lambda_{n} = {result.lambdas[n]}, expected {math.factorial(n)}")
    if not result.commutator_entries_ok():
        failures.append("some entry of C_i or D_i lies outside [R,R]")

    stats = _base_stats(a)
    stats["lambda_terms"] = [len(l) for l in result.lambdas]
    stats["nonzero_C"] = sum(1 for m in result.c_matrices if not m.is_zero())
    stats["nonzero_D"] = sum(1 for m in result.d_matrices if not m.is_zero())
    return VerificationReport.from_residuals(
        "thm22", {"right identity": right, "left identity": left}, failures, stats
    )


def _sandwich(powers: Sequence[Matrix], middle: Callable[[int, int], Matrix]) -> Matrix:
    """sum over i, j of A^i M_ij A^j."""
    n = powers[0].n
    total = Matrix.zero(powers[0].ring, n)
    for i in range(n + 1):
        for j in range(n + 1):
            total = total + powers[i] * middle(i, j) * powers[j]
    return total


def sandwich_sum(a: Matrix, lambdas: Sequence[Element]) -> Matrix:
    """sum_{i,j} A^i (lambda_i lambda_j) A^j."""
    powers = a.powers(a.n)
    return _sandwich(powers, lambda i, j: Matrix.scalar(a.ring, a.n, lambdas[i] * lambdas[j]))


def verify_thm31(a: Matrix, lambdas: Optional[Sequence[Element]] = None) -> VerificationReport:
    lambdas = tuple(lambdas) if lambdas is not None else symmetric_charpoly(a)
    n = a.n
    residual = sandwich_sum(a, lambdas)

    c_nn = lambdas[n] * lambdas[n]
    expected = Element.scalar(a.ring, math.factorial(n) ** 2)
    failures = [] if c_nn == expected else [f"c_{n},{n} = {c_nn}, expected {expected}"]

    stats = _base_stats(a)
    stats["summand_pairs"] = (n + 1) ** 2
    scalar = c_nn.scalar_value()
    details = {"c_nn": str(c_nn) if scalar is None else str(scalar)}
    if residual.is_zero():
        logger.debug("sandwich residual vanishes over %s", a.ring.label)
    else:
        logger.info("sandwich residual is nonzero over %s", a.ring.label)
    return VerificationReport.from_residuals("thm31", {"sandwich": residual}, failures, stats, details)


def sandwich_product_identity(a: Matrix, result: Optional[CharPolyResult] = None) -> VerificationReport:
    """Compare sum A^i lambda_i lambda_j A^j with sum A^i C_i D_j A^j, both expanded independently."""
    result = result or decompose_thm22(a)
    powers = a.powers(a.n)
    lhs = _sandwich(powers, lambda i, j: Matrix.scalar(a.ring, a.n, result.lambdas[i] * result.lambdas[j]))
    rhs = _sandwich(powers, lambda i, j: result.c_matrices[i] * result.d_matrices[j])

    stats = _base_stats(a)
    stats["summand_pairs"] = (a.n + 1) ** 2
    details = {"lambda_side_is_zero": lhs.is_zero(), "commutator_side_is_zero": rhs.is_zero()}
    return VerificationReport.from_residuals(
        "sandwich-product", {"lambda side - commutator side": lhs - rhs}, stats=stats, details=details
    )


def verify_invariance(a: Matrix, g: Matrix) -> VerificationReport:
    """lambda_i(G A G^-1) = lambda_i(A) for every i."""
    conj = conjugate(a, g)
    before = symmetric_charpoly(a)
    after = symmetric_charpoly(conj)
    residuals = {f"lambda_{i}": after[i] - before[i] for i in range(a.n + 1)}
    stats = _base_stats(a)
    return VerificationReport.from_residuals(
        "invariance", residuals, stats=stats, details={"conjugator": g.to_strings()}
    )


@dataclass
class WitnessSearch:
    """Outcome of a randomized search for a matrix with a nonzero sandwich residual."""

    ring: RingDescriptor
    n: int
    trials_run: int = 0
    witness: Optional[Matrix] = None
    report: Optional[VerificationReport] = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def search_sandwich_witness(
    ring: RingDescriptor,
    n: int,
    trials: int,
    seed: int = 0,
    **element_kwargs,
) -> WitnessSearch:
    """
    Draw random matrices until the sandwich residual is nonzero or trials run out.

    Nothing is asserted either way; the caller decides what a witness (or its
    absence) means for the ring at hand.
    """
    rng = random.Random(seed)
    search = WitnessSearch(ring, n)
    for trial in range(trials):
        a = random_matrix(ring, n, rng, **element_kwargs)
        report = verify_thm31(a)
        search.trials_run = trial + 1
        if not report.holds:
            search.witness, search.report = a, report
            logger.info("sandwich witness over %s found after %d trials", ring.label, trial + 1)
            break
    else:
        logger.info("no sandwich witness over %s in %d trials", ring.label, trials)
    return search
