"""
Monomial keys and their multiplication tables, one scheme per ring kind.

Keys are tuples:

- rational:           ``()`` only
- commutative-poly:   exponent vector, one entry per generator
- free-algebra:       word of 1-based generator indices (``()`` is the monomial 1)
- grassmann:          strictly increasing index tuple (sign-normalized basis blade)
- upper-triangular-2: matrix unit ``(1, 1)``, ``(1, 2)`` or ``(2, 2)``
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, List, Optional, Tuple

from ring_core.descriptor import RingDescriptor, RingKind

Key = Tuple[int, ...]
# (sign, key) or None when the product vanishes.
KeyProduct = Optional[Tuple[int, Key]]

U2_UNITS: Tuple[Key, Key, Key] = ((1, 1), (1, 2), (2, 2))


def _mul_rational(a: Key, b: Key) -> KeyProduct:
    return 1, ()


def _mul_commutative(a: Key, b: Key) -> KeyProduct:
    return 1, tuple(x + y for x, y in zip(a, b))


def _mul_free(a: Key, b: Key) -> KeyProduct:
    return 1, a + b


def _mul_grassmann(a: Key, b: Key) -> KeyProduct:
    """Blade product: zero on a repeated generator, else the sign of the sorting permutation."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a).intersection(b):
        return None
    # each pair (x in a, y in b) with x > y costs one transposition
    swaps = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        swaps += j
    return (-1 if swaps % 2 else 1), tuple(sorted(a + b))


def _mul_u2(a: Key, b: Key) -> KeyProduct:
    # E_ij * E_kl = E_il when j == k
    if a[1] != b[0]:
        return None
    return 1, (a[0], b[1])


_MULTIPLIERS: Dict[RingKind, Callable[[Key, Key], KeyProduct]] = {
    RingKind.RATIONAL: _mul_rational,
    RingKind.COMMUTATIVE_POLY: _mul_commutative,
    RingKind.FREE_ALGEBRA: _mul_free,
    RingKind.GRASSMANN: _mul_grassmann,
    RingKind.UPPER_TRIANGULAR_2: _mul_u2,
}


def key_multiplier(ring: RingDescriptor) -> Callable[[Key, Key], KeyProduct]:
    return _MULTIPLIERS[ring.kind]


def unit_keys(ring: RingDescriptor) -> List[Key]:
    """Keys whose coefficient-1 sum is the multiplicative identity."""
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        return [(0,) * ring.generator_count]
    if ring.kind is RingKind.UPPER_TRIANGULAR_2:
        return [(1, 1), (2, 2)]
    return [()]


def generator_key(ring: RingDescriptor, index: int) -> Key:
    """Key of generator ``index`` (1-based)."""
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        exps = [0] * ring.generator_count
        exps[index - 1] = 1
        return tuple(exps)
    return (index,)


def key_degree(ring: RingDescriptor, key: Key) -> int:
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        return sum(key)
    if ring.kind in (RingKind.FREE_ALGEBRA, RingKind.GRASSMANN):
        return len(key)
    return 0


def sort_key(ring: RingDescriptor, key: Key) -> tuple:
    """Deglex position of a key; the canonical term order of every Element."""
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        # x1^2 before x1*x2 before x2^2
        return (sum(key), tuple(-e for e in key))
    if ring.kind in (RingKind.FREE_ALGEBRA, RingKind.GRASSMANN):
        return (len(key), key)
    return key


def basis_keys(ring: RingDescriptor) -> List[Key]:
    """Full monomial basis of a finite-dimensional ring, in canonical order."""
    if ring.kind is RingKind.RATIONAL:
        return [()]
    if ring.kind is RingKind.UPPER_TRIANGULAR_2:
        return list(U2_UNITS)
    if ring.kind is RingKind.GRASSMANN:
        idx = range(1, ring.generator_count + 1)
        return [c for size in range(ring.generator_count + 1) for c in itertools.combinations(idx, size)]
    raise ValueError(f"{ring.label} is infinite-dimensional")


def cyclic_class(word: Key) -> Key:
    """Least rotation of a word; words with equal classes agree modulo [R,R]."""
    if len(word) <= 1:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def key_validator(ring: RingDescriptor) -> Callable[[Key], bool]:
    """Predicate accepting exactly the keys that name a monomial of ``ring``."""
    k = ring.generator_count
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        return lambda key: isinstance(key, tuple) and len(key) == k and all(e >= 0 for e in key)
    if ring.kind is RingKind.FREE_ALGEBRA:
        return lambda key: isinstance(key, tuple) and all(1 <= i <= k for i in key)
    if ring.kind is RingKind.GRASSMANN:
        return lambda key: (
            isinstance(key, tuple)
            and all(1 <= i <= k for i in key)
            and all(x < y for x, y in zip(key, key[1:]))
        )
    if ring.kind is RingKind.UPPER_TRIANGULAR_2:
        return lambda key: key in U2_UNITS
    return lambda key: key == ()
