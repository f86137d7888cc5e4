"""
Membership in the two-sided ideal I of the free algebra generated by [x,y][u,v].

I is spanned by m1 [w1,w2] [w3,w4] m2 over words m1, w1..w4, m2, and every such
element is multihomogeneous, so a homogeneous target is split by letter
multiset and each piece is tested against the spanning elements with exactly
those letters. Exact elimination decides membership; the recorded row
combinations give a certificate that expands back to the target.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from ring_core import Element, RingDescriptor, RingKind, SparseSpan, element_sum
from ring_core.errors import (
    CertificationDisabledError,
    InvariantViolation,
    NonHomogeneousError,
    RingDescriptorError,
)
from matrix_algebra import Matrix
from charpoly_engine import symmetric_charpoly
from identity_verifier.cayley_hamilton import sandwich_sum
from identity_verifier.report import VerificationReport

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

GENERATOR_DEGREE = 4
# Re-test the target after this many new independent rows.
CHECK_EVERY = 64


@dataclass(frozen=True)
class IdealMembershipInstance:
    target: Element
    degree: int
    generator_count: int

    def __post_init__(self) -> None:
        ring = self.target.ring
        if ring.kind is not RingKind.FREE_ALGEBRA:
            raise RingDescriptorError(f"ideal membership is decided in the free algebra, not {ring.label}")
        if self.generator_count != ring.generator_count:
            raise RingDescriptorError(
                f"generator_count {self.generator_count} does not match {ring.label}"
            )
        if not self.target.is_homogeneous():
            raise NonHomogeneousError(
                f"target has components of degrees {sorted(self.target.homogeneous_components())}"
            )
        if self.target and self.target.degree() != self.degree:
            raise NonHomogeneousError(f"target has degree {self.target.degree()}, declared {self.degree}")

    @classmethod
    def for_element(cls, target: Element) -> "IdealMembershipInstance":
        return cls(target, max(target.degree(), 0), target.ring.generator_count)


@dataclass(frozen=True, order=True)
class IdealGenerator:
    """m1 [w1, w2] [w3, w4] m2 with words m1, m2 (possibly empty) and w1..w4 (nonempty)."""

    left: Word
    w1: Word
    w2: Word
    w3: Word
    w4: Word
    right: Word

    def vector(self) -> Dict[Word, Fraction]:
        out: Dict[Word, Fraction] = {}
        for a, b, sa in ((self.w1, self.w2, 1), (self.w2, self.w1, -1)):
            for c, d, sc in ((self.w3, self.w4, 1), (self.w4, self.w3, -1)):
                word = self.left + a + b + c + d + self.right
                out[word] = out.get(word, 0) + sa * sc
        return {w: Fraction(c) for w, c in out.items() if c}

    def expand(self, ring: RingDescriptor) -> Element:
        return Element(ring, self.vector())

    def describe(self, ring: RingDescriptor) -> str:
        def word(w: Word) -> str:
            return str(Element(ring, {w: 1}))

        parts = [f"[{word(self.w1)},{word(self.w2)}]", f"[{word(self.w3)},{word(self.w4)}]"]
        if self.left:
            parts.insert(0, word(self.left))
        if self.right:
            parts.append(word(self.right))
        return "*".join(parts)


@dataclass(frozen=True)
class MembershipCertificate:
    """target = sum of coefficient * generator."""

    terms: Tuple[Tuple[IdealGenerator, Fraction], ...]

    def expand(self, ring: RingDescriptor) -> Element:
        return element_sum(ring, (g.expand(ring) * c for g, c in self.terms))

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class MembershipResult:
    instance: IdealMembershipInstance
    member: bool
    certificate: Optional[MembershipCertificate] = None
    stats: Dict[str, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.member


@lru_cache(maxsize=None)
def _cuts(degree: int) -> Tuple[Tuple[int, ...], ...]:
    """Piece lengths (l0..l5) summing to degree with l1..l4 >= 1."""
    out = []
    for inner in itertools.product(range(1, degree + 1), repeat=4):
        rest = degree - sum(inner)
        if rest < 0:
            continue
        for l0 in range(rest + 1):
            out.append((l0,) + inner + (rest - l0,))
    return tuple(out)


def _spanning_generators(letters: Word) -> Iterator[IdealGenerator]:
    """Spanning elements with letter multiset ``letters``; [w1,w2] = -[w2,w1] so only w1 < w2 (and w3 < w4) is kept."""
    for arrangement in sorted(set(itertools.permutations(letters))):
        for cut in _cuts(len(letters)):
            pieces = []
            start = 0
            for length in cut:
                pieces.append(arrangement[start:start + length])
                start += length
            left, w1, w2, w3, w4, right = pieces
            if w1 < w2 and w3 < w4:
                yield IdealGenerator(left, w1, w2, w3, w4, right)


def _multihomogeneous_parts(target: Element) -> Dict[Word, Dict[Word, Fraction]]:
    parts: Dict[Word, Dict[Word, Fraction]] = {}
    for word, c in target.terms:
        parts.setdefault(tuple(sorted(word)), {})[word] = c
    return parts


def _decide_part(letters: Word, target: Dict[Word, Fraction], stats: Counter) -> Optional[Dict[IdealGenerator, Fraction]]:
    span = SparseSpan(track=True)
    added = 0
    for gen in _spanning_generators(letters):
        stats["generators_tried"] += 1
        vec = gen.vector()
        if not vec or not span.add(vec, gen):
            continue
        added += 1
        if added % CHECK_EVERY == 0 and span.contains(target):
            break
    stats["rank"] += span.rank
    return span.express(target)


def ideal_membership(instance: IdealMembershipInstance) -> MembershipResult:
    target = instance.target
    ring = target.ring
    if target.is_zero():
        return MembershipResult(instance, True, MembershipCertificate(()))
    if instance.degree < GENERATOR_DEGREE:
        # every spanning element has degree >= 4
        return MembershipResult(instance, False, stats={"components": 0})

    stats: Counter = Counter()
    terms: List[Tuple[IdealGenerator, Fraction]] = []
    for letters, part in sorted(_multihomogeneous_parts(target).items()):
        stats["components"] += 1
        combo = _decide_part(letters, part, stats)
        if combo is None:
            logger.debug("component %s of degree %d is outside the ideal", letters, instance.degree)
            return MembershipResult(instance, False, stats=dict(stats))
        terms.extend(sorted(combo.items(), key=lambda gc: gc[0]))

    certificate = MembershipCertificate(tuple(terms))
    if certificate.expand(ring) != target:
        raise InvariantViolation("membership certificate does not expand to the target")
    stats["certificate_terms"] = len(certificate)
    return MembershipResult(instance, True, certificate, dict(stats))


def sandwich_certificates(a: Matrix, allow_large: bool = False) -> Dict[Tuple[int, int], List[MembershipResult]]:
    """Membership of each homogeneous piece of each entry of sum A^i lambda_i lambda_j A^j."""
    if a.ring.kind is not RingKind.FREE_ALGEBRA:
        raise RingDescriptorError(f"generic certification needs a free-algebra matrix, not {a.ring.label}")
    if a.n >= 3 and not allow_large:
        raise CertificationDisabledError(
            f"certification at n={a.n} is switched off; set NCCH_ENABLE_N3_CERTIFICATION=1 to enable it"
        )
    if a.n >= 3:
        logger.warning("certifying at n=%d enumerates large degree-%d components", a.n, 2 * a.n)

    residual = sandwich_sum(a, symmetric_charpoly(a))
    results: Dict[Tuple[int, int], List[MembershipResult]] = {}
    for i in range(a.n):
        for j in range(a.n):
            pieces = residual[i, j].homogeneous_components().values()
            results[(i, j)] = [ideal_membership(IdealMembershipInstance.for_element(p)) for p in pieces]
    return results


def certify_sandwich(a: Matrix, allow_large: bool = False) -> VerificationReport:
    results = sandwich_certificates(a, allow_large)
    failures = []
    details = {}
    totals: Counter = Counter()
    for (i, j), pieces in results.items():
        if not all(pieces):
            failures.append(f"entry ({i + 1},{j + 1}) is outside the ideal")
        details[f"entry ({i + 1},{j + 1})"] = (
            f"{sum(len(r.certificate) for r in pieces if r.certificate)} certificate terms"
        )
        for r in pieces:
            totals.update(r.stats)
    stats = {"n": a.n, "ring": a.ring.label, "entries": len(results)}
    stats.update(sorted(totals.items()))
    return VerificationReport.from_residuals("ideal-membership", {}, failures, stats, details)
