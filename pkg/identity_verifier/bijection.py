"""
The pairing of summands of tr(A*A) with summands of tr(AA*).

Each summand of either trace is sgn(rho) times a product a_{i_1,rho(i_1)} ... a_{i_n,rho(i_n)}
over a sequence of row indices that visits every row once:

- tr(A*A), indexed by (tau, s) with tau(s) = s: rows tau(k) for k != s, then s
- tr(AA*), indexed by (alpha, p) with alpha(p) = p: row p, then alpha(k) for k != p

theta_map sends (tau, s) to the (alpha, p) with the same row sequence and
delta_map goes back, so the two traces agree summand by summand. When
s != 1 the image has p = tau(1); when p != n it has alpha(n) = s.
"""

from __future__ import annotations

import functools
import operator
from dataclasses import dataclass
from typing import Sequence, Tuple

from ring_core import Element
from ring_core.errors import NotInStarredSetError
from matrix_algebra import Matrix
from charpoly_engine.permutations import is_permutation, sign


@dataclass(frozen=True)
class PermutationPair:
    """(tau, s) in S_n*: tau in one-line notation with tau(s) = s."""

    tau: Tuple[int, ...]
    s: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", tuple(self.tau))
        if not self.tau or not is_permutation(self.tau):
            raise NotInStarredSetError(f"{self.tau} is not a permutation of 1..{len(self.tau)}")
        if not 1 <= self.s <= len(self.tau):
            raise NotInStarredSetError(f"s={self.s} outside 1..{len(self.tau)}")
        if self.tau[self.s - 1] != self.s:
            raise NotInStarredSetError(f"tau({self.s}) = {self.tau[self.s - 1]}, not {self.s}")

    @property
    def n(self) -> int:
        return len(self.tau)

    def __call__(self, k: int) -> int:
        return self.tau[k - 1]


def u_rows(pair: PermutationPair) -> Tuple[int, ...]:
    """Row order of the tr(A*A) summands indexed by (tau, s)."""
    return tuple(pair(k) for k in range(1, pair.n + 1) if k != pair.s) + (pair.s,)


def v_rows(pair: PermutationPair) -> Tuple[int, ...]:
    """Row order of the tr(AA*) summands indexed by (alpha, p)."""
    return (pair.s,) + tuple(pair(k) for k in range(1, pair.n + 1) if k != pair.s)


def theta_map(pair: PermutationPair) -> PermutationPair:
    rows = u_rows(pair)
    p = rows[0]
    rest = iter(rows[1:])
    alpha = tuple(p if k == p else next(rest) for k in range(1, pair.n + 1))
    return PermutationPair(alpha, p)


def delta_map(pair: PermutationPair) -> PermutationPair:
    rows = v_rows(pair)
    s = rows[-1]
    rest = iter(rows[:-1])
    tau = tuple(s if k == s else next(rest) for k in range(1, pair.n + 1))
    return PermutationPair(tau, s)


def _signed_product(a: Matrix, rho: Sequence[int], rows: Sequence[int]) -> Element:
    factors = [a[i - 1, rho[i - 1] - 1] for i in rows]
    term = functools.reduce(operator.mul, factors)
    return term if sign(rho) > 0 else -term


def u_term(a: Matrix, rho: Sequence[int], pair: PermutationPair) -> Element:
    """Summand u(rho, tau, s) of tr(A*A)."""
    return _signed_product(a, rho, u_rows(pair))


def v_term(a: Matrix, rho: Sequence[int], pair: PermutationPair) -> Element:
    """Summand v(rho, alpha, p) of tr(AA*)."""
    return _signed_product(a, rho, v_rows(pair))
