"""
Exact ring elements in sparse canonical form.

An Element is a map from monomial keys (see ``ring_core.monomials``) to nonzero
Fractions, stored in deglex order. Elements are immutable; every operation
returns a new canonical Element, so equality is plain comparison of term maps.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from ring_core.descriptor import RingDescriptor, RingKind
from ring_core.errors import DescriptorMismatchError, RingDescriptorError
from ring_core.monomials import (
    Key,
    U2_UNITS,
    generator_key,
    key_degree,
    key_multiplier,
    key_validator,
    sort_key,
    unit_keys,
)

Scalar = Union[int, Fraction]


def _canonical(ring: RingDescriptor, terms: Mapping[Key, Scalar]) -> Dict[Key, Fraction]:
    items = [(k, Fraction(c)) for k, c in terms.items() if c != 0]
    items.sort(key=lambda kc: sort_key(ring, kc[0]))
    return dict(items)


class Element:
    """A ring element tagged with its RingDescriptor."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Optional[Mapping[Key, Scalar]] = None):
        terms = terms or {}
        valid = key_validator(ring)
        for key in terms:
            if not valid(key):
                raise DescriptorMismatchError(f"monomial key {key!r} does not belong to {ring.label}")
        self.ring = ring
        self._terms: Dict[Key, Fraction] = _canonical(ring, terms)
        self._hash: Optional[int] = None

    @classmethod
    def _make(cls, ring: RingDescriptor, terms: Mapping[Key, Scalar]) -> "Element":
        """Unchecked constructor for results of arithmetic on valid Elements."""
        e = cls.__new__(cls)
        e.ring = ring
        e._terms = _canonical(ring, terms)
        e._hash = None
        return e

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "Element":
        return cls(ring)

    @classmethod
    def one(cls, ring: RingDescriptor) -> "Element":
        return cls.scalar(ring, 1)

    @classmethod
    def scalar(cls, ring: RingDescriptor, value: Scalar) -> "Element":
        return cls(ring, {k: value for k in unit_keys(ring)})

    @classmethod
    def generator(cls, ring: RingDescriptor, index: int) -> "Element":
        if not ring.has_generators:
            raise RingDescriptorError(f"{ring.label} has no generators")
        if not 1 <= index <= ring.generator_count:
            raise RingDescriptorError(
                f"generator index {index} outside 1..{ring.generator_count} for {ring.label}"
            )
        return cls(ring, {generator_key(ring, index): 1})

    @classmethod
    def upper_triangular(cls, ring: RingDescriptor, p: Scalar, q: Scalar, r: Scalar) -> "Element":
        """The U2 element [[p, q], [0, r]]."""
        if ring.kind is not RingKind.UPPER_TRIANGULAR_2:
            raise RingDescriptorError(f"u(p,q,r) needs upper-triangular-2, not {ring.label}")
        return cls(ring, dict(zip(U2_UNITS, (p, q, r))))

    @classmethod
    def from_terms(cls, ring: RingDescriptor, terms: Mapping[Key, Scalar]) -> "Element":
        return cls(ring, terms)

    # ---- accessors ----------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[Key, Fraction], ...]:
        return tuple(self._terms.items())

    def coefficient(self, key: Key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def keys(self) -> Iterator[Key]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Largest monomial degree; -1 for zero."""
        if not self._terms:
            return -1
        return max(key_degree(self.ring, k) for k in self._terms)

    def is_homogeneous(self) -> bool:
        return len({key_degree(self.ring, k) for k in self._terms}) <= 1

    def homogeneous_components(self) -> Dict[int, "Element"]:
        parts: Dict[int, Dict[Key, Fraction]] = {}
        for k, c in self._terms.items():
            parts.setdefault(key_degree(self.ring, k), {})[k] = c
        return {d: Element._make(self.ring, t) for d, t in sorted(parts.items())}

    def scalar_value(self) -> Optional[Fraction]:
        """c when self == c*1, else None."""
        if not self._terms:
            return Fraction(0)
        units = unit_keys(self.ring)
        if set(self._terms) != set(units):
            return None
        values = {self._terms[k] for k in units}
        return values.pop() if len(values) == 1 else None

    def as_triple(self) -> Tuple[Fraction, Fraction, Fraction]:
        if self.ring.kind is not RingKind.UPPER_TRIANGULAR_2:
            raise RingDescriptorError(f"as_triple needs upper-triangular-2, not {self.ring.label}")
        p, q, r = (self.coefficient(k) for k in U2_UNITS)
        return p, q, r

    # ---- arithmetic ---------------------------------------------------

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.ring != self.ring:
            raise DescriptorMismatchError(f"cannot combine {self.ring.label} with {other.ring.label}")

    def _coerce(self, other: Union["Element", Scalar]) -> "Element":
        if isinstance(other, (int, Fraction)):
            return Element.scalar(self.ring, other)
        self._check(other)
        return other

    def __add__(self, other: Union["Element", Scalar]) -> "Element":
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Element._make(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._make(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Union["Element", Scalar]) -> "Element":
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) - c
        return Element._make(self.ring, out)

    def __rsub__(self, other: Scalar) -> "Element":
        return self._coerce(other) - self

    def __mul__(self, other: Union["Element", Scalar]) -> "Element":
        if isinstance(other, (int, Fraction)):
            return Element._make(self.ring, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        acc: Dict[Key, Fraction] = {}
        _accumulate_product(acc, self, other, 1)
        return Element._make(self.ring, acc)

    def __rmul__(self, other: Scalar) -> "Element":
        if isinstance(other, (int, Fraction)):
            return Element._make(self.ring, {k: other * c for k, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = Element.one(self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Element({self.ring.label}, {self})"

    def __str__(self) -> str:
        from ring_core.printing import format_element

        return format_element(self)


def _accumulate_product(acc: Dict[Key, Fraction], a: Element, b: Element, sign: int) -> None:
    mul = key_multiplier(a.ring)
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            prod = mul(ka, kb)
            if prod is None:
                continue
            s, k = prod
            acc[k] = acc.get(k, 0) + s * sign * ca * cb


def dot(ring: RingDescriptor, pairs: Iterable[Tuple[Element, Element]]) -> Element:
    """Sum of products a*b over ``pairs``, canonicalized once."""
    acc: Dict[Key, Fraction] = {}
    for a, b in pairs:
        if a.ring != ring or b.ring != ring:
            raise DescriptorMismatchError(f"operand outside {ring.label}")
        _accumulate_product(acc, a, b, 1)
    return Element._make(ring, acc)


def element_sum(ring: RingDescriptor, items: Iterable[Element]) -> Element:
    acc: Dict[Key, Fraction] = {}
    for e in items:
        if e.ring != ring:
            raise DescriptorMismatchError(f"operand outside {ring.label}")
        for k, c in e._terms.items():
            acc[k] = acc.get(k, 0) + c
    return Element._make(ring, acc)


def elem_add(a: Element, b: Element) -> Element:
    a._check(b)
    return a + b


def elem_mul(a: Element, b: Element) -> Element:
    a._check(b)
    return a * b


def commutator(a: Element, b: Element) -> Element:
    """[a, b] = ab - ba."""
    a._check(b)
    acc: Dict[Key, Fraction] = {}
    _accumulate_product(acc, a, b, 1)
    _accumulate_product(acc, b, a, -1)
    return Element._make(a.ring, acc)


def ring_basis_generators(ring: RingDescriptor) -> Tuple[Element, ...]:
    """Elements generating the ring as an algebra over the rationals."""
    if ring.kind is RingKind.UPPER_TRIANGULAR_2:
        return tuple(Element(ring, {k: 1}) for k in U2_UNITS)
    if ring.has_generators:
        return tuple(Element.generator(ring, i) for i in range(1, ring.generator_count + 1))
    return ()


def center_contains(a: Element) -> bool:
    """True iff ``a`` commutes with every algebra generator of its ring."""
    return all(commutator(a, g).is_zero() for g in ring_basis_generators(a.ring))
