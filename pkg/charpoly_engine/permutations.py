"""Permutations of {1..n} in one-line notation, enumerated lexicographically."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence, Tuple

Permutation = Tuple[int, ...]


@lru_cache(maxsize=None)
def permutations(n: int) -> Tuple[Permutation, ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def fixing(n: int, s: int) -> Tuple[Permutation, ...]:
    """Permutations tau with tau(s) = s."""
    return tuple(p for p in permutations(n) if p[s - 1] == s)


@lru_cache(maxsize=None)
def starred_pairs(n: int) -> Tuple[Tuple[Permutation, int], ...]:
    """S_n* = {(tau, s) : tau(s) = s}, ordered by tau then s."""
    return tuple((tau, s) for tau in permutations(n) for s in range(1, n + 1) if tau[s - 1] == s)


def sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def is_permutation(perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(1, len(perm) + 1))


def preadjoint_pairs_per_column(n: int) -> int:
    """(tau, rho) pairs enumerated for one column s of the preadjoint: (n-1)! * n!."""
    return math.factorial(n - 1) * math.factorial(n)
