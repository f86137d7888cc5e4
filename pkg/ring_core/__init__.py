"""Exact arithmetic for the five supported coefficient rings."""

from ring_core.commutator_span import commutator_span, is_in_commutator_subgroup
from ring_core.descriptor import DEFAULT_GRASSMANN_GENERATORS, RingDescriptor, RingKind
from ring_core.element import (
    Element,
    center_contains,
    commutator,
    dot,
    elem_add,
    elem_mul,
    element_sum,
    ring_basis_generators,
)
from ring_core.linear_span import SparseSpan
from ring_core.printing import format_element, format_rational
from ring_core.random_elements import random_element

__all__ = [
    "DEFAULT_GRASSMANN_GENERATORS",
    "Element",
    "RingDescriptor",
    "RingKind",
    "SparseSpan",
    "center_contains",
    "commutator",
    "commutator_span",
    "dot",
    "elem_add",
    "elem_mul",
    "element_sum",
    "format_element",
    "format_rational",
    "is_in_commutator_subgroup",
    "random_element",
    "ring_basis_generators",
]
