"""Verdicts and reports shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Union

from ring_core import Element
from matrix_algebra import Matrix

Residual = Union[Matrix, Element]


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"


def _is_zero(r: Residual) -> bool:
    return r.is_zero()


def _render(r: Residual) -> Any:
    if isinstance(r, Matrix):
        return r.to_strings()
    return str(r)


@dataclass
class VerificationReport:
    """
    Outcome of one verifier run.

    ``residuals`` maps a name to the Matrix/Element that must vanish; the verdict
    is HOLDS exactly when all of them are zero and no named side check failed.
    """

    claim: str
    verdict: Verdict
    residuals: Dict[str, Residual] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_residuals(
        cls,
        claim: str,
        residuals: Mapping[str, Residual],
        failures: Optional[List[str]] = None,
        stats: Optional[Dict[str, Any]] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> "VerificationReport":
        failures = list(failures or [])
        nonzero = [name for name, r in residuals.items() if not _is_zero(r)]
        failures.extend(f"{name} is nonzero" for name in nonzero)
        verdict = Verdict.VIOLATED if failures else Verdict.HOLDS
        return cls(claim, verdict, dict(residuals), failures, dict(stats or {}), dict(details or {}))

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def residual(self) -> Optional[Residual]:
        """The first nonzero residual, if any."""
        for r in self.residuals.values():
            if not _is_zero(r):
                return r
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "verdict": self.verdict.value,
            "residuals": {name: _render(r) for name, r in self.residuals.items()},
            "failures": list(self.failures),
            "stats": dict(self.stats),
            "details": dict(self.details),
        }

    def summary_lines(self) -> List[str]:
        lines = [f"{self.claim}: {self.verdict.value}"]
        for key, value in self.stats.items():
            lines.append(f"  {key}: {value}")
        for key, value in self.details.items():
            lines.append(f"  {key}: {value}")
        for name, r in self.residuals.items():
            if _is_zero(r):
                continue
            lines.append(f"  residual {name}:")
            text = str(r)
            lines.extend("    " + ln for ln in text.splitlines())
        for msg in self.failures:
            lines.append(f"  failed: {msg}")
        return lines
