"""Shared hypothesis strategies for elements and matrices over every supported ring."""

from __future__ import annotations

from hypothesis import strategies as st

from ring_core import Element, RingDescriptor, RingKind
from ring_core.monomials import U2_UNITS
from matrix_algebra import Matrix

RINGS = (
    RingDescriptor.rational(),
    RingDescriptor.commutative(2),
    RingDescriptor.free(3),
    RingDescriptor.grassmann(4),
    RingDescriptor.upper_triangular(),
)

coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(lambda c: c != 0)


def keys(ring: RingDescriptor, max_degree: int = 2) -> st.SearchStrategy:
    k = ring.generator_count
    if ring.kind is RingKind.UPPER_TRIANGULAR_2:
        return st.sampled_from(U2_UNITS)
    if ring.kind is RingKind.RATIONAL or k == 0:
        return st.just(())
    letters = st.integers(min_value=1, max_value=k)
    if ring.kind is RingKind.FREE_ALGEBRA:
        return st.lists(letters, max_size=max_degree).map(tuple)
    if ring.kind is RingKind.GRASSMANN:
        return st.sets(letters, max_size=max_degree).map(lambda s: tuple(sorted(s)))

    def exponents(word):
        exps = [0] * k
        for i in word:
            exps[i - 1] += 1
        return tuple(exps)

    return st.lists(letters, max_size=max_degree).map(exponents)


@st.composite
def elements(draw, ring: RingDescriptor, max_terms: int = 3, max_degree: int = 2) -> Element:
    terms = draw(st.dictionaries(keys(ring, max_degree), coefficients, max_size=max_terms))
    return Element.from_terms(ring, terms)


@st.composite
def matrices(draw, ring: RingDescriptor, n: int, max_terms: int = 2) -> Matrix:
    return Matrix(ring, [[draw(elements(ring, max_terms=max_terms)) for _ in range(n)] for _ in range(n)])


@st.composite
def ring_and_elements(draw, count: int, max_terms: int = 3):
    ring = draw(st.sampled_from(RINGS))
    return ring, [draw(elements(ring, max_terms=max_terms)) for _ in range(count)]

