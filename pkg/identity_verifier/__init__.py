"""Machine checks of the trace equality, the Cayley-Hamilton identities and ideal membership."""

from identity_verifier.bijection import PermutationPair, delta_map, theta_map, u_rows, u_term, v_rows, v_term
from identity_verifier.cayley_hamilton import (
    WitnessSearch,
    sandwich_product_identity,
    sandwich_sum,
    search_sandwich_witness,
    verify_invariance,
    verify_thm22,
    verify_thm31,
)
from identity_verifier.ideal_membership import (
    IdealGenerator,
    IdealMembershipInstance,
    MembershipCertificate,
    MembershipResult,
    certify_sandwich,
    ideal_membership,
    sandwich_certificates,
)
from identity_verifier.prop21 import verify_prop21
from identity_verifier.report import Verdict, VerificationReport
from identity_verifier.ring_identities import IDENTITIES, check_ring_identity

__all__ = [
    "IDENTITIES",
    "IdealGenerator",
    "IdealMembershipInstance",
    "MembershipCertificate",
    "MembershipResult",
    "PermutationPair",
    "Verdict",
    "VerificationReport",
    "WitnessSearch",
    "certify_sandwich",
    "check_ring_identity",
    "delta_map",
    "ideal_membership",
    "sandwich_certificates",
    "sandwich_product_identity",
    "sandwich_sum",
    "search_sandwich_witness",
    "theta_map",
    "u_rows",
    "u_term",
    "v_rows",
    "v_term",
    "verify_invariance",
    "verify_prop21",
    "verify_thm22",
    "verify_thm31",
]
