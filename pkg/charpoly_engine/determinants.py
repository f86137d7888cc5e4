"""Left, right and symmetric determinants."""

from __future__ import annotations

from typing import Optional

from ring_core import Element
from matrix_algebra import Matrix
from charpoly_engine.preadjoint import preadjoint


def ldet(a: Matrix, star: Optional[Matrix] = None) -> Element:
    """tr(A* A)."""
    star = preadjoint(a) if star is None else star
    return (star * a).trace()


def rdet(a: Matrix, star: Optional[Matrix] = None) -> Element:
    """tr(A A*)."""
    star = preadjoint(a) if star is None else star
    return (a * star).trace()


def sdet(a: Matrix) -> Element:
    """Symmetric determinant; ldet and rdet always agree, so this is ldet."""
    return ldet(a)
