"""
Textbook determinant, adjugate and characteristic polynomial, computed by sympy.

Only meaningful over commutative rings; this is the independent reference the
preadjoint machinery is cross-checked against (sdet = n! det, A* = (n-1)! adj).
Entries are translated into sympy polynomials in the ring's generators, so the
oracle shares no arithmetic with the code it checks.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy

from ring_core import Element, RingDescriptor, RingKind
from ring_core.errors import RingDescriptorError
from ring_core.monomials import Key
from matrix_algebra import Matrix

logger = logging.getLogger(__name__)

# division-free, so polynomial entries stay polynomial
_METHOD = "berkowitz"


def _require_commutative(a: Matrix) -> None:
    if not a.ring.is_commutative:
        raise RingDescriptorError(f"the classical oracle needs a commutative ring, not {a.ring.label}")


def _symbols(ring: RingDescriptor) -> Tuple[sympy.Symbol, ...]:
    if not ring.has_generators or ring.generator_count == 0:
        return ()
    return tuple(sympy.symbols(f"{ring.generator_prefix}1:{ring.generator_count + 1}"))


def _exponents(ring: RingDescriptor, key: Key) -> Tuple[int, ...]:
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        return key
    if ring.kind in (RingKind.FREE_ALGEBRA, RingKind.GRASSMANN) and ring.generator_count == 1:
        return (len(key),)
    return ()


def _key(ring: RingDescriptor, exponents: Tuple[int, ...]) -> Optional[Key]:
    """Inverse of _exponents; None for monomials that vanish in the ring (v1^2 over Grassmann)."""
    if ring.kind is RingKind.COMMUTATIVE_POLY:
        return tuple(exponents)
    if not exponents:
        return ()
    (e,) = exponents
    if ring.kind is RingKind.GRASSMANN and e > 1:
        return None
    return (1,) * e


def to_sympy(e: Element, gens: Tuple[sympy.Symbol, ...]) -> sympy.Expr:
    total = sympy.Integer(0)
    for key, c in e.terms:
        term = sympy.Rational(c.numerator, c.denominator)
        for sym, power in zip(gens, _exponents(e.ring, key)):
            term *= sym ** power
        total += term
    return total


def from_sympy(expr: sympy.Expr, ring: RingDescriptor, gens: Tuple[sympy.Symbol, ...]) -> Element:
    expr = sympy.expand(expr)
    if not gens:
        value = sympy.Rational(expr)
        return Element.scalar(ring, Fraction(int(value.p), int(value.q)))
    terms: Dict[Key, Fraction] = {}
    for exponents, coeff in sympy.Poly(expr, *gens, domain=sympy.QQ).terms():
        key = _key(ring, tuple(exponents))
        if key is None:
            continue
        value = sympy.Rational(coeff)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(int(value.p), int(value.q))
    return Element.from_terms(ring, terms)


def _to_sympy_matrix(a: Matrix) -> Tuple[sympy.Matrix, Tuple[sympy.Symbol, ...]]:
    _require_commutative(a)
    gens = _symbols(a.ring)
    return sympy.Matrix([[to_sympy(e, gens) for e in row] for row in a.rows]), gens


def classical_det(a: Matrix) -> Element:
    m, gens = _to_sympy_matrix(a)
    return from_sympy(m.det(method=_METHOD), a.ring, gens)


def classical_adjugate(a: Matrix) -> Matrix:
    """Transpose of the cofactor matrix; [1] for 1x1."""
    m, gens = _to_sympy_matrix(a)
    if a.n == 1:
        return Matrix.identity(a.ring, 1)
    adj = m.adjugate(method=_METHOD)
    rows: List[List[Element]] = [[from_sympy(adj[i, j], a.ring, gens) for j in range(a.n)] for i in range(a.n)]
    return Matrix(a.ring, rows)


def classical_charpoly(a: Matrix) -> Tuple[Element, ...]:
    """Coefficients c_0..c_n of det(xI - A)."""
    m, gens = _to_sympy_matrix(a)
    x = sympy.Dummy("x")
    coeffs = m.charpoly(x).all_coeffs()
    logger.debug("classical charpoly of a %dx%d matrix over %s", a.n, a.n, a.ring.label)
    return tuple(from_sympy(c, a.ring, gens) for c in reversed(coeffs))
