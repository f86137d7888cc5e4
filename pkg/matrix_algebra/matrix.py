"""Square matrices over a ring_core ring. No commutativity is assumed anywhere."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterator, List, Sequence, Tuple, Union

from ring_core import Element, RingDescriptor, dot, element_sum, random_element
from ring_core.errors import DescriptorMismatchError, DimensionMismatchError

Scalar = Union[int, Fraction]


class Matrix:
    """An n x n array of Elements over one ring. Indices are 0-based."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: RingDescriptor, rows: Sequence[Sequence[Element]]):
        n = len(rows)
        if n == 0:
            raise DimensionMismatchError("matrices must be at least 1x1")
        for row in rows:
            if len(row) != n:
                raise DimensionMismatchError(f"expected a square {n}x{n} array, got a row of length {len(row)}")
            for e in row:
                if e.ring != ring:
                    raise DescriptorMismatchError(f"entry from {e.ring.label} in a matrix over {ring.label}")
        self.ring = ring
        self.rows: Tuple[Tuple[Element, ...], ...] = tuple(tuple(row) for row in rows)

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: RingDescriptor, n: int) -> "Matrix":
        z = Element.zero(ring)
        return cls(ring, [[z] * n for _ in range(n)])

    @classmethod
    def scalar(cls, ring: RingDescriptor, n: int, value: Union[Element, Scalar]) -> "Matrix":
        """value * I; ``value`` may be any Element (it sits on the diagonal)."""
        if not isinstance(value, Element):
            value = Element.scalar(ring, value)
        z = Element.zero(ring)
        return cls(ring, [[value if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, ring: RingDescriptor, n: int) -> "Matrix":
        return cls.scalar(ring, n, 1)

    @classmethod
    def from_scalars(cls, ring: RingDescriptor, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        return cls(ring, [[Element.scalar(ring, c) for c in row] for row in rows])

    @classmethod
    def generic(cls, n: int, prefix: str = "x") -> "Matrix":
        """A = [x_ij] over the free algebra on n^2 generators, x_ij = x_{(i-1)n+j}."""
        ring = RingDescriptor.free(n * n, prefix)
        return cls(ring, [[Element.generator(ring, i * n + j + 1) for j in range(n)] for i in range(n)])

    # ---- accessors ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: Tuple[int, int]) -> Element:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> Iterator[Element]:
        for row in self.rows:
            yield from row

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def map(self, fn: Callable[[Element], Element]) -> "Matrix":
        return Matrix(self.ring, [[fn(e) for e in row] for row in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, [list(col) for col in zip(*self.rows)])

    # ---- arithmetic ---------------------------------------------------

    def _check(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise DescriptorMismatchError(f"cannot combine {self.ring.label} with {other.ring.label}")
        if other.n != self.n:
            raise DimensionMismatchError(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda e: -e)

    def __mul__(self, other: Union["Matrix", Scalar]) -> "Matrix":
        if isinstance(other, (int, Fraction)):
            return self.map(lambda e: e * other)
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        return Matrix(
            self.ring,
            [[dot(self.ring, zip(self.rows[i], cols[j])) for j in range(n)] for i in range(n)],
        )

    def __rmul__(self, other: Scalar) -> "Matrix":
        if isinstance(other, (int, Fraction)):
            return self.map(lambda e: other * e)
        return NotImplemented

    def scale_left(self, c: Element) -> "Matrix":
        """c * A, entrywise c * a_ij."""
        return self.map(lambda e: c * e)

    def scale_right(self, c: Element) -> "Matrix":
        """A * c, entrywise a_ij * c."""
        return self.map(lambda e: e * c)

    def trace(self) -> Element:
        return element_sum(self.ring, (self.rows[i][i] for i in range(self.n)))

    def power(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative matrix powers are not defined")
        result = Matrix.identity(self.ring, self.n)
        for _ in range(k):
            result = result * self
        return result

    def powers(self, k: int) -> List["Matrix"]:
        """[A^0, A^1, ..., A^k]."""
        out = [Matrix.identity(self.ring, self.n)]
        for _ in range(k):
            out.append(out[-1] * self)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ring, self.rows))

    def to_strings(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.rows]

    def __str__(self) -> str:
        cells = self.to_strings()
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self) -> str:
        return f"Matrix({self.ring.label}, {self.to_strings()})"


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a * b


def mat_scale(a: Matrix, c: Element, side: str = "left") -> Matrix:
    if side == "left":
        return a.scale_left(c)
    if side == "right":
        return a.scale_right(c)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def mat_trace(a: Matrix) -> Element:
    return a.trace()


def mat_power(a: Matrix, k: int) -> Matrix:
    return a.power(k)


def random_matrix(ring: RingDescriptor, n: int, rng: random.Random, **element_kwargs) -> Matrix:
    return Matrix(ring, [[random_element(ring, rng, **element_kwargs) for _ in range(n)] for _ in range(n)])


def permutation_matrix(ring: RingDescriptor, perm: Sequence[int]) -> Matrix:
    """P with P[i][perm(i)] = 1 (perm in 1-based one-line notation)."""
    n = len(perm)
    return Matrix.from_scalars(ring, [[1 if perm[i] == j + 1 else 0 for j in range(n)] for i in range(n)])
