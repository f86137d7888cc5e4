"""Exception types shared by every package in the project."""

from __future__ import annotations

from typing import Optional


class NcchError(ValueError):
    """Base class for all user-facing errors (bad input, incompatible operands)."""


class RingDescriptorError(NcchError):
    """A ring descriptor is malformed (unknown kind, bad generator count or prefix)."""


class DescriptorMismatchError(NcchError):
    """Two operands live in different rings."""


class DimensionMismatchError(NcchError):
    """Matrix shapes do not fit the operation."""


class NonCentralMatrixError(NcchError):
    """A conjugator has an entry outside the centre of the ring."""


class NonInvertibleMatrixError(NcchError):
    """A conjugator cannot be inverted over the central subring."""


class NotInStarredSetError(NcchError):
    """A permutation pair (tau, s) does not satisfy tau(s) == s."""


class NonHomogeneousError(NcchError):
    """An ideal-membership target is not homogeneous."""


class CertificationDisabledError(NcchError):
    """Generic certification requested at a size that is switched off by configuration."""


class ElementParseError(NcchError):
    """Element expression could not be parsed; ``offset`` points at the failure."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnknownGeneratorError(ElementParseError):
    """Generator atom whose prefix the ring does not know."""


class GeneratorIndexError(ElementParseError):
    """Generator index outside 1..generator_count."""


class ConstructorRingError(ElementParseError):
    """The u(p,q,r) constructor used outside the upper-triangular ring."""


class JobSpecError(NcchError):
    """A job file is malformed."""


class InvariantViolation(RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""
