"""Ring descriptors: which coefficient ring an Element lives in."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping

from ring_core.errors import RingDescriptorError

DEFAULT_GRASSMANN_GENERATORS = 4

_PREFIX_RE = re.compile(r"[A-Za-z]+")


class RingKind(str, Enum):
    RATIONAL = "rational"
    COMMUTATIVE_POLY = "commutative-poly"
    FREE_ALGEBRA = "free-algebra"
    GRASSMANN = "grassmann"
    UPPER_TRIANGULAR_2 = "upper-triangular-2"


# Kinds whose elements are built from numbered generators.
GENERATOR_KINDS = frozenset(
    {RingKind.COMMUTATIVE_POLY, RingKind.FREE_ALGEBRA, RingKind.GRASSMANN}
)

_DEFAULT_PREFIX = {
    RingKind.COMMUTATIVE_POLY: "x",
    RingKind.FREE_ALGEBRA: "x",
    RingKind.GRASSMANN: "v",
}


@dataclass(frozen=True)
class RingDescriptor:
    """
    One of the five supported coefficient rings.

    ``generator_count`` is 0 for the rationals and for U2; the generator kinds
    accept any k >= 0, and k = 0 makes them isomorphic to the rationals.
    """

    kind: RingKind
    generator_count: int = 0
    generator_prefix: str = ""

    def __post_init__(self) -> None:
        try:
            kind = RingKind(self.kind)
        except ValueError:
            raise RingDescriptorError(f"Unknown ring kind: {self.kind!r}") from None
        object.__setattr__(self, "kind", kind)
        if not isinstance(self.generator_count, int) or self.generator_count < 0:
            raise RingDescriptorError(
                f"generator_count must be a non-negative integer, got {self.generator_count!r}"
            )
        if kind in GENERATOR_KINDS:
            prefix = self.generator_prefix or _DEFAULT_PREFIX[kind]
            if not _PREFIX_RE.fullmatch(prefix):
                raise RingDescriptorError(f"Bad generator prefix: {prefix!r}")
            object.__setattr__(self, "generator_prefix", prefix)
        else:
            if self.generator_count != 0:
                raise RingDescriptorError(f"{kind.value} takes no generators")
            object.__setattr__(self, "generator_prefix", "")

    @classmethod
    def rational(cls) -> "RingDescriptor":
        return cls(RingKind.RATIONAL)

    @classmethod
    def commutative(cls, generator_count: int, prefix: str = "x") -> "RingDescriptor":
        return cls(RingKind.COMMUTATIVE_POLY, generator_count, prefix)

    @classmethod
    def free(cls, generator_count: int, prefix: str = "x") -> "RingDescriptor":
        return cls(RingKind.FREE_ALGEBRA, generator_count, prefix)

    @classmethod
    def grassmann(
        cls, generator_count: int = DEFAULT_GRASSMANN_GENERATORS, prefix: str = "v"
    ) -> "RingDescriptor":
        return cls(RingKind.GRASSMANN, generator_count, prefix)

    @classmethod
    def upper_triangular(cls) -> "RingDescriptor":
        return cls(RingKind.UPPER_TRIANGULAR_2)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "RingDescriptor":
        """Build from a job-file object such as ``{"kind": "grassmann", "generator_count": 4}``."""
        if "kind" not in data:
            raise RingDescriptorError("ring object needs a 'kind'")
        kind = data["kind"]
        try:
            kind = RingKind(kind)
        except ValueError:
            raise RingDescriptorError(f"Unknown ring kind: {kind!r}") from None
        default_count = DEFAULT_GRASSMANN_GENERATORS if kind is RingKind.GRASSMANN else 0
        return cls(
            kind,
            data.get("generator_count", default_count),
            data.get("generator_prefix", "") or "",
        )

    def to_mapping(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.has_generators:
            out["generator_count"] = self.generator_count
            out["generator_prefix"] = self.generator_prefix
        return out

    @property
    def has_generators(self) -> bool:
        return self.kind in GENERATOR_KINDS

    @property
    def is_commutative(self) -> bool:
        if self.kind in (RingKind.RATIONAL, RingKind.COMMUTATIVE_POLY):
            return True
        if self.kind is RingKind.FREE_ALGEBRA:
            return self.generator_count <= 1
        if self.kind is RingKind.GRASSMANN:
            return self.generator_count <= 1
        return False

    @property
    def label(self) -> str:
        if self.has_generators:
            return f"{self.kind.value}(k={self.generator_count}, prefix={self.generator_prefix})"
        return self.kind.value

    def __str__(self) -> str:
        return self.label
