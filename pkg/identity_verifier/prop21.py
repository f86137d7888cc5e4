"""tr(A*A) = tr(AA*), checked on the traces and, optionally, summand by summand."""

from __future__ import annotations

import logging
import math

from ring_core import element_sum
from matrix_algebra import Matrix
from charpoly_engine import ldet, permutations, preadjoint, preadjoint_pairs_per_column, rdet, starred_pairs
from identity_verifier.bijection import PermutationPair, delta_map, theta_map, u_term, v_term
from identity_verifier.report import VerificationReport

logger = logging.getLogger(__name__)

CLAIM = "prop21"


def verify_prop21(a: Matrix, term_level: bool = True) -> VerificationReport:
    n = a.n
    star = preadjoint(a)
    left, right = ldet(a, star), rdet(a, star)
    residuals = {"tr(A*A) - tr(AA*)": left - right}
    failures = []
    stats = {
        "n": n,
        "ring": a.ring.label,
        "preadjoint_pairs_per_column": preadjoint_pairs_per_column(n),
        "ldet_terms": len(left),
    }

    if term_level:
        matched = mismatched = 0
        u_terms = []
        for tau, s in starred_pairs(n):
            pair = PermutationPair(tau, s)
            image = theta_map(pair)
            if delta_map(image) != pair:
                failures.append(f"delta(theta({tau}, {s})) != ({tau}, {s})")
            for rho in permutations(n):
                u = u_term(a, rho, pair)
                u_terms.append(u)
                if u == v_term(a, rho, image):
                    matched += 1
                else:
                    mismatched += 1
        if mismatched:
            failures.append(f"{mismatched} summand pairs differ under theta")

        # v = u o delta, walked from the tr(AA*) side
        reverse_mismatched = 0
        for alpha, p in starred_pairs(n):
            pair = PermutationPair(alpha, p)
            preimage = delta_map(pair)
            if theta_map(preimage) != pair:
                failures.append(f"theta(delta({alpha}, {p})) != ({alpha}, {p})")
            for rho in permutations(n):
                if v_term(a, rho, pair) != u_term(a, rho, preimage):
                    reverse_mismatched += 1
        if reverse_mismatched:
            failures.append(f"{reverse_mismatched} summand pairs differ under delta")
        if element_sum(a.ring, u_terms) != left:
            failures.append("summands of tr(A*A) do not add up to ldet")
        stats["term_pairs"] = matched + mismatched
        stats["term_pairs_matched"] = matched
        logger.info("prop21 term level: %d/%d summand pairs matched", matched, math.factorial(n) ** 2)

    return VerificationReport.from_residuals(CLAIM, residuals, failures, stats)
