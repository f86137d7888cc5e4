"""
Membership in the additive commutator subgroup [R, R].

- free algebra: a lies in [R, R] iff, for every class of words under cyclic
  rotation, the coefficients of a on that class sum to zero (u*w - w*u moves
  weight only inside a rotation class)
- rationals and commutative polynomials: [R, R] = 0
- Grassmann and U2: finite-dimensional, so [R, R] is the span of the
  commutators of basis elements, computed once per ring by exact elimination
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict

from ring_core.descriptor import RingDescriptor, RingKind
from ring_core.element import Element, commutator
from ring_core.linear_span import SparseSpan
from ring_core.monomials import Key, basis_keys, cyclic_class


@lru_cache(maxsize=None)
def commutator_span(ring: RingDescriptor) -> SparseSpan:
    """Span of [e_a, e_b] over all pairs of basis monomials (finite-dimensional rings)."""
    basis = [Element(ring, {k: 1}) for k in basis_keys(ring)]
    span = SparseSpan()
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            c = commutator(a, b)
            if c:
                span.add(dict(c.terms))
    return span


def is_in_commutator_subgroup(a: Element) -> bool:
    ring = a.ring
    if a.is_zero():
        return True
    if ring.kind in (RingKind.RATIONAL, RingKind.COMMUTATIVE_POLY):
        return False
    if ring.kind is RingKind.FREE_ALGEBRA:
        sums: Dict[Key, Fraction] = {}
        for word, c in a.terms:
            cls = cyclic_class(word)
            sums[cls] = sums.get(cls, 0) + c
        return all(v == 0 for v in sums.values())
    return commutator_span(ring).contains(dict(a.terms))
