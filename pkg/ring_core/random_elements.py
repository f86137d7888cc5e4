"""Seeded random Elements with small integer coefficients (|c| <= 3)."""

from __future__ import annotations

import random
from typing import Dict

from ring_core.descriptor import RingDescriptor, RingKind
from ring_core.element import Element
from ring_core.monomials import Key, U2_UNITS

COEFF_BOUND = 3


def _coefficient(rng: random.Random, bound: int) -> int:
    c = 0
    while c == 0:
        c = rng.randint(-bound, bound)
    return c


def _random_key(ring: RingDescriptor, rng: random.Random, max_degree: int) -> Key:
    k = ring.generator_count
    if k == 0:
        return (0,) * k if ring.kind is RingKind.COMMUTATIVE_POLY else ()
    degree = rng.randint(0, max_degree)
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        exps = [0] * k
        for _ in range(degree):
            exps[rng.randrange(k)] += 1
        return tuple(exps)
    if ring.kind is RingKind.FREE_ALGEBRA:
        return tuple(rng.randint(1, k) for _ in range(degree))
    # grassmann: a blade of at most max_degree distinct generators
    return tuple(sorted(rng.sample(range(1, k + 1), min(degree, k))))


def random_element(
    ring: RingDescriptor,
    rng: random.Random,
    max_terms: int = 3,
    max_degree: int = 2,
    coeff_bound: int = COEFF_BOUND,
) -> Element:
    """A random element; may be zero when all drawn terms cancel."""
    if ring.kind is RingKind.UPPER_TRIANGULAR_2:
        return Element(ring, {k: rng.randint(-coeff_bound, coeff_bound) for k in U2_UNITS})
    if ring.kind is RingKind.RATIONAL:
        return Element.scalar(ring, rng.randint(-coeff_bound, coeff_bound))
    terms: Dict[Key, int] = {}
    for _ in range(rng.randint(1, max_terms)):
        key = _random_key(ring, rng, max_degree)
        terms[key] = terms.get(key, 0) + _coefficient(rng, coeff_bound)
    return Element(ring, terms)
