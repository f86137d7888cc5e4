"""JSON job files: a ring, a square matrix of element expressions and run options."""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from ring_core import RingDescriptor, RingKind
from ring_core.errors import ElementParseError, JobSpecError, RingDescriptorError
from matrix_algebra import Matrix, permutation_matrix, random_matrix
from cli_app.expression_parser import parse_element

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 20
DEFAULT_RANDOM_GENERATORS = 2


@dataclass
class JobSpec:
    ring: RingDescriptor
    n: int
    entries: List[List[str]]
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    conjugator: Optional[List[List[str]]] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise JobSpecError(f"n must be a positive integer, got {self.n!r}")
        _check_grid("entries", self.entries, self.n)
        if self.conjugator is not None:
            _check_grid("conjugator", self.conjugator, self.n)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "JobSpec":
        if not isinstance(data, Mapping):
            raise JobSpecError("a job file must hold a single JSON object")
        for key in ("ring", "n", "entries"):
            if key not in data:
                raise JobSpecError(f"job is missing {key!r}")
        if not isinstance(data["ring"], Mapping):
            raise JobSpecError("'ring' must be an object")
        ring = RingDescriptor.from_mapping(data["ring"])
        options = data.get("options") or {}
        if not isinstance(options, Mapping):
            raise JobSpecError("'options' must be an object")
        try:
            seed = int(options.get("seed", 0))
            trials = int(options.get("trials", DEFAULT_TRIALS))
        except (TypeError, ValueError) as exc:
            raise JobSpecError(f"bad option value: {exc}") from exc
        extra = {k: v for k, v in options.items() if k not in {"seed", "trials", "conjugator"}}
        return cls(ring, data["n"], data["entries"], seed, trials, options.get("conjugator"), extra)

    def to_mapping(self) -> Dict[str, Any]:
        options: Dict[str, Any] = {"seed": self.seed, "trials": self.trials}
        if self.conjugator is not None:
            options["conjugator"] = self.conjugator
        options.update(self.extra)
        return {"ring": self.ring.to_mapping(), "n": self.n, "entries": self.entries, "options": options}

    def to_json(self) -> str:
        return json.dumps(self.to_mapping(), indent=2, ensure_ascii=False) + "\n"


def _check_grid(name: str, grid: Any, n: int) -> None:
    if not isinstance(grid, list) or len(grid) != n:
        raise JobSpecError(f"{name} must be a list of {n} rows")
    for row in grid:
        if not isinstance(row, list) or len(row) != n:
            raise JobSpecError(f"every row of {name} must hold {n} expressions")
        for cell in row:
            if not isinstance(cell, (str, int)):
                raise JobSpecError(f"{name} cells must be strings, got {cell!r}")


def load_job(path: Path) -> JobSpec:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise JobSpecError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    except UnicodeDecodeError as exc:
        raise JobSpecError(f"{path}: not UTF-8 text (byte {exc.start})") from exc
    return JobSpec.from_mapping(data)


def save_job(spec: JobSpec, path: Path) -> None:
    Path(path).write_text(spec.to_json(), encoding="utf-8")


def build_matrix(spec: JobSpec) -> Matrix:
    rows = []
    for i, row in enumerate(spec.entries, start=1):
        cells = []
        for j, src in enumerate(row, start=1):
            try:
                cells.append(parse_element(str(src), spec.ring))
            except ElementParseError as exc:
                raise type(exc)(f"entry ({i},{j}): {exc}") from exc
        rows.append(cells)
    return Matrix(spec.ring, rows)


def _parse_scalar(src: Any) -> Fraction:
    try:
        return Fraction(str(src).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise JobSpecError(f"conjugator entry {src!r} is not a rational number") from exc


def build_conjugator(spec: JobSpec) -> Matrix:
    """The job's conjugator, or the reversal permutation matrix when none is given."""
    if spec.conjugator is None:
        return permutation_matrix(spec.ring, list(range(spec.n, 0, -1)))
    return Matrix.from_scalars(spec.ring, [[_parse_scalar(c) for c in row] for row in spec.conjugator])


def ring_from_name(kind: str, generator_count: Optional[int] = None, grassmann_default: int = 4) -> RingDescriptor:
    try:
        ring_kind = RingKind(kind)
    except ValueError as exc:
        raise RingDescriptorError(
            f"unknown ring kind {kind!r}; expected one of {[k.value for k in RingKind]}"
        ) from exc
    if ring_kind is RingKind.RATIONAL:
        return RingDescriptor.rational()
    if ring_kind is RingKind.UPPER_TRIANGULAR_2:
        return RingDescriptor.upper_triangular()
    if ring_kind is RingKind.GRASSMANN:
        return RingDescriptor.grassmann(grassmann_default if generator_count is None else generator_count)
    k = DEFAULT_RANDOM_GENERATORS if generator_count is None else generator_count
    if ring_kind is RingKind.COMMUTATIVE_POLY:
        return RingDescriptor.commutative(k)
    return RingDescriptor.free(k)


def generate_generic_job(n: int, prefix: str = "x") -> JobSpec:
    """The free-algebra matrix with n^2 distinct generators."""
    a = Matrix.generic(n, prefix)
    return JobSpec(a.ring, n, a.to_strings())


def generate_random_job(ring: RingDescriptor, n: int, seed: int, trials: int = DEFAULT_TRIALS) -> JobSpec:
    a = random_matrix(ring, n, random.Random(seed))
    return JobSpec(ring, n, a.to_strings(), seed=seed, trials=trials)

