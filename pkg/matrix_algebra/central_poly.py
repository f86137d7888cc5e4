"""
Polynomials in a central indeterminate x.

x is never a ring generator: a polynomial is just its coefficient sequence, so
coefficients multiply by convolution in their original order and x commutes
with everything by construction. XPoly holds the entries of M_n(R[x]);
CentralPoly holds the same objects as polynomials with matrix coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from ring_core import Element, RingDescriptor, dot, element_sum
from ring_core.errors import DescriptorMismatchError, DimensionMismatchError
from matrix_algebra.matrix import Matrix

Scalar = Union[int, Fraction]


class XPoly:
    """c_0 + c_1 x + ... + c_d x^d with Element coefficients; trailing zeros stripped."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingDescriptor, coeffs: Iterable[Element] = ()):
        cs = list(coeffs)
        for c in cs:
            if c.ring != ring:
                raise DescriptorMismatchError(f"coefficient from {c.ring.label} in a polynomial over {ring.label}")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ring = ring
        self.coeffs: Tuple[Element, ...] = tuple(cs)

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "XPoly":
        return cls(ring)

    @classmethod
    def one(cls, ring: RingDescriptor) -> "XPoly":
        return cls(ring, [Element.one(ring)])

    @classmethod
    def constant(cls, c: Element) -> "XPoly":
        return cls(c.ring, [c])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> Element:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Element.zero(self.ring)

    def padded(self, length: int) -> List[Element]:
        return [self.coefficient(d) for d in range(length)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "XPoly") -> None:
        if other.ring != self.ring:
            raise DescriptorMismatchError(f"cannot combine {self.ring.label} with {other.ring.label}")

    def __add__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.ring, [self.coefficient(d) + other.coefficient(d) for d in range(size)])

    def __sub__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.ring, [self.coefficient(d) - other.coefficient(d) for d in range(size)])

    def __neg__(self) -> "XPoly":
        return XPoly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other: Union["XPoly", Scalar]) -> "XPoly":
        if isinstance(other, (int, Fraction)):
            return XPoly(self.ring, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return XPoly.zero(self.ring)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(len(a) + len(b) - 1):
            lo, hi = max(0, k - len(b) + 1), min(k, len(a) - 1)
            out.append(dot(self.ring, ((a[i], b[k - i]) for i in range(lo, hi + 1))))
        return XPoly(self.ring, out)

    def evaluate_at(self, c: Element) -> Element:
        """Substitute a central element for x (Horner from the top)."""
        result = Element.zero(self.ring)
        for coeff in reversed(self.coeffs):
            result = result * c + coeff
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        return f"XPoly({self.ring.label}, {[str(c) for c in self.coeffs]})"


def xpoly_sum(ring: RingDescriptor, items: Iterable[XPoly]) -> XPoly:
    items = list(items)
    size = max((len(p.coeffs) for p in items), default=0)
    return XPoly(ring, [element_sum(ring, (p.coefficient(d) for p in items)) for d in range(size)])


class CentralPoly:
    """M_0 + M_1 x + ... + M_d x^d with n x n Matrix coefficients."""

    __slots__ = ("ring", "n", "coeffs")

    def __init__(self, ring: RingDescriptor, n: int, coeffs: Iterable[Matrix] = ()):
        cs = list(coeffs)
        for m in cs:
            if m.ring != ring:
                raise DescriptorMismatchError(f"coefficient from {m.ring.label} in a polynomial over {ring.label}")
            if m.n != n:
                raise DimensionMismatchError(f"{m.n}x{m.n} coefficient in an {n}x{n} polynomial")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ring = ring
        self.n = n
        self.coeffs: Tuple[Matrix, ...] = tuple(cs)

    @classmethod
    def constant(cls, m: Matrix) -> "CentralPoly":
        return cls(m.ring, m.n, [m])

    @classmethod
    def scalar_identity(cls, p: XPoly, n: int) -> "CentralPoly":
        """p(x) I."""
        return cls(p.ring, n, [Matrix.scalar(p.ring, n, c) for c in p.coeffs])

    @classmethod
    def from_entries(cls, ring: RingDescriptor, grid: Sequence[Sequence[XPoly]]) -> "CentralPoly":
        n = len(grid)
        size = max((len(p.coeffs) for row in grid for p in row), default=0)
        return cls(
            ring,
            n,
            [Matrix(ring, [[p.coefficient(d) for p in row] for row in grid]) for d in range(size)],
        )

    def entry_grid(self) -> List[List[XPoly]]:
        return [
            [XPoly(self.ring, [m[i, j] for m in self.coeffs]) for j in range(self.n)]
            for i in range(self.n)
        ]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> Matrix:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Matrix.zero(self.ring, self.n)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "CentralPoly") -> None:
        if other.ring != self.ring:
            raise DescriptorMismatchError(f"cannot combine {self.ring.label} with {other.ring.label}")
        if other.n != self.n:
            raise DimensionMismatchError(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other: "CentralPoly") -> "CentralPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return CentralPoly(self.ring, self.n, [self.coefficient(d) + other.coefficient(d) for d in range(size)])

    def __sub__(self, other: "CentralPoly") -> "CentralPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return CentralPoly(self.ring, self.n, [self.coefficient(d) - other.coefficient(d) for d in range(size)])

    def __neg__(self) -> "CentralPoly":
        return CentralPoly(self.ring, self.n, [-m for m in self.coeffs])

    def __mul__(self, other: Union["CentralPoly", Scalar]) -> "CentralPoly":
        if isinstance(other, (int, Fraction)):
            return CentralPoly(self.ring, self.n, [m * other for m in self.coeffs])
        return cpoly_mul(self, other)

    def __rmul__(self, other: Scalar) -> "CentralPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def trace(self) -> XPoly:
        return XPoly(self.ring, [m.trace() for m in self.coeffs])

    def evaluate_at(self, c: Element) -> Matrix:
        """Sum of M_d scaled by c^d; c must be central for this to be a ring map."""
        result = Matrix.zero(self.ring, self.n)
        power = Element.one(self.ring)
        for m in self.coeffs:
            result = result + m.scale_right(power)
            power = power * c
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CentralPoly):
            return NotImplemented
        return self.ring == other.ring and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.n, self.coeffs))


def cpoly_mul(p: CentralPoly, q: CentralPoly) -> CentralPoly:
    """Convolution of matrix coefficients; x is central so no reordering terms appear."""
    p._check(q)
    if p.is_zero() or q.is_zero():
        return CentralPoly(p.ring, p.n)
    a, b = p.coeffs, q.coeffs
    out: List[Matrix] = []
    for k in range(len(a) + len(b) - 1):
        acc = Matrix.zero(p.ring, p.n)
        for i in range(max(0, k - len(b) + 1), min(k, len(a) - 1) + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return CentralPoly(p.ring, p.n, out)


def x_identity_minus(a: Matrix) -> CentralPoly:
    """xI - A: constant coefficient -A, linear coefficient I."""
    return CentralPoly(a.ring, a.n, [-a, Matrix.identity(a.ring, a.n)])
