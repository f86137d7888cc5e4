"""Canonical text form of Elements; the element parser reads it back unchanged."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import List

from ring_core.descriptor import RingKind
from ring_core.element import Element
from ring_core.monomials import Key, unit_keys


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_monomial(element: Element, key: Key) -> str:
    ring = element.ring
    prefix = ring.generator_prefix
    factors: List[str] = []
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        for i, e in enumerate(key, start=1):
            if e:
                factors.append(f"{prefix}{i}" if e == 1 else f"{prefix}{i}^{e}")
    elif ring.kind is RingKind.FREE_ALGEBRA:
        for index, run in itertools.groupby(key):
            power = len(list(run))
            factors.append(f"{prefix}{index}" if power == 1 else f"{prefix}{index}^{power}")
    else:
        factors = [f"{prefix}{i}" for i in key]
    return "*".join(factors)


def format_element(element: Element) -> str:
    """Deglex-ordered sum of terms, e.g. ``x1*x4 - x2*x3 + 1/2``; U2 prints as ``u(p,q,r)``."""
    if element.is_zero():
        return "0"
    if element.ring.kind is RingKind.UPPER_TRIANGULAR_2:
        return "u({})".format(",".join(format_rational(c) for c in element.as_triple()))
    units = set(unit_keys(element.ring))
    parts: List[str] = []
    for key, coeff in element.terms:
        magnitude = abs(coeff)
        if key in units:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = _format_monomial(element, key)
        else:
            body = f"{format_rational(magnitude)}*{_format_monomial(element, key)}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)
