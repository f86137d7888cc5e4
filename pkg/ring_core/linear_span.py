"""
Exact row-echelon spans of sparse rational vectors.

Vectors are dicts from hashable, mutually comparable coordinates to Fractions.
Each stored row is normalized so its pivot (least coordinate) has coefficient 1,
and reduction always clears the least pivot present, so it terminates and gives
the same answer for the same insertion order. With ``track=True`` every row also
remembers which inserted vectors it is a combination of, which is what makes
membership certificates possible.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Dict, Hashable, Mapping, Optional, Tuple

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, Fraction]
Combination = Dict[Any, Fraction]


def _axpy(target: Dict, factor: Fraction, row: Mapping) -> None:
    """target -= factor * row, dropping cancelled coordinates."""
    for k, c in row.items():
        v = target.get(k, 0) - factor * c
        if v:
            target[k] = v
        else:
            target.pop(k, None)


class SparseSpan:
    """Incrementally built span of sparse vectors over the rationals."""

    def __init__(self, track: bool = False):
        self.track = track
        self._rows: Dict[Hashable, Tuple[Vector, Combination]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Mapping[Hashable, Fraction]) -> Tuple[Vector, Combination]:
        rem: Vector = {k: Fraction(c) for k, c in vector.items() if c}
        used: Combination = {}
        while True:
            pivots = [k for k in rem if k in self._rows]
            if not pivots:
                return rem, used
            pivot = min(pivots)
            factor = rem[pivot]
            row, combo = self._rows[pivot]
            _axpy(rem, factor, row)
            if self.track:
                for label, c in combo.items():
                    v = used.get(label, 0) + factor * c
                    if v:
                        used[label] = v
                    else:
                        used.pop(label, None)

    def add(self, vector: Mapping[Hashable, Fraction], label: Any = None) -> bool:
        """Insert ``vector``; returns True when it enlarged the span."""
        rem, used = self._reduce(vector)
        if not rem:
            return False
        pivot = min(rem)
        scale = rem[pivot]
        row = {k: c / scale for k, c in rem.items()}
        combo: Combination = {}
        if self.track:
            # row = (vector - sum(used)) / scale, expressed in inserted labels
            combo = {lab: -c / scale for lab, c in used.items()}
            combo[label] = combo.get(label, 0) + 1 / scale
            combo = {lab: c for lab, c in combo.items() if c}
        self._rows[pivot] = (row, combo)
        return True

    def contains(self, vector: Mapping[Hashable, Fraction]) -> bool:
        rem, _ = self._reduce(vector)
        return not rem

    def express(self, vector: Mapping[Hashable, Fraction]) -> Optional[Combination]:
        """Coefficients over inserted labels reproducing ``vector``, or None outside the span."""
        if not self.track:
            raise ValueError("express() needs a span built with track=True")
        rem, used = self._reduce(vector)
        if rem:
            return None
        return used
