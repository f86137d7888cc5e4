"""
Subcommand handlers. Each returns a CommandOutput; main.py decides how to print it.

Exit codes: 0 computed or verified, 1 an identity was violated, 2 bad input
(the last is raised as an NcchError and mapped in main.py).
"""

from __future__ import annotations

import dataclasses
import logging
import math
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from ring_core import Element, RingKind
from ring_core.errors import NcchError
from matrix_algebra import Matrix, random_matrix
from charpoly_engine import (
    classical_adjugate,
    classical_charpoly,
    classical_det,
    decompose_thm22,
    preadjoint,
    sdet,
    symmetric_charpoly,
)
from identity_verifier import (
    IDENTITIES,
    VerificationReport,
    certify_sandwich,
    check_ring_identity,
    sandwich_product_identity,
    search_sandwich_witness,
    verify_invariance,
    verify_prop21,
    verify_thm22,
    verify_thm31,
)
from cli_app.jobs import (
    JobSpec,
    build_conjugator,
    build_matrix,
    generate_generic_job,
    generate_random_job,
    load_job,
    ring_from_name,
    save_job,
)
from cli_app.settings import Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2


@dataclass
class CommandOutput:
    exit_code: int = EXIT_OK
    lines: List[str] = field(default_factory=list)
    payload: Dict[str, Any] = field(default_factory=dict)


def _lambda_lines(lambdas) -> List[str]:
    return [f"λ{i} = {lam}" for i, lam in enumerate(lambdas)]


def _matrix_block(name: str, m: Matrix) -> List[str]:
    return [f"{name} ="] + ["  " + ln for ln in str(m).splitlines()]


def _report_output(reports: List[VerificationReport], payload: Optional[Dict[str, Any]] = None) -> CommandOutput:
    out = CommandOutput()
    out.exit_code = EXIT_OK if all(r.holds for r in reports) else EXIT_VIOLATED
    for r in reports:
        out.lines.extend(r.summary_lines())
    out.payload = dict(payload or {})
    out.payload["reports"] = [r.to_dict() for r in reports]
    out.payload["verdict"] = "holds" if out.exit_code == EXIT_OK else "violated"
    return out


def _timed(args, run: Callable[[], VerificationReport]) -> VerificationReport:
    """Run one check; with --timings its wall time lands in the report stats."""
    start = time.perf_counter()
    report = run()
    if getattr(args, "timings", False):
        report.stats["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    return report


def load_matrix_job(path: Path, settings: Settings) -> Tuple[JobSpec, Matrix]:
    spec = load_job(path)
    if spec.n > settings.max_n:
        logger.warning(
            "n=%d is above the configured cap %d; preadjoint sums grow as (n-1)!*n! per column",
            spec.n, settings.max_n,
        )
    return spec, build_matrix(spec)


def cmd_charpoly(args, settings: Settings) -> CommandOutput:
    _, a = load_matrix_job(args.file, settings)
    lambdas = symmetric_charpoly(a)
    return CommandOutput(
        lines=_lambda_lines(lambdas),
        payload={"n": a.n, "ring": a.ring.label, "lambdas": [str(l) for l in lambdas]},
    )


def cmd_preadjoint(args, settings: Settings) -> CommandOutput:
    _, a = load_matrix_job(args.file, settings)
    star = preadjoint(a)
    return CommandOutput(
        lines=_matrix_block("A*", star),
        payload={"n": a.n, "ring": a.ring.label, "preadjoint": star.to_strings()},
    )


def cmd_decompose(args, settings: Settings) -> CommandOutput:
    _, a = load_matrix_job(args.file, settings)
    result = decompose_thm22(a)
    lines = _lambda_lines(result.lambdas)
    for i, c in enumerate(result.c_matrices):
        lines.extend(_matrix_block(f"C{i}", c))
    for i, d in enumerate(result.d_matrices):
        lines.extend(_matrix_block(f"D{i}", d))
    payload = {
        "n": a.n,
        "ring": a.ring.label,
        "lambdas": [str(l) for l in result.lambdas],
        "C": [m.to_strings() for m in result.c_matrices],
        "D": [m.to_strings() for m in result.d_matrices],
    }
    return CommandOutput(lines=lines, payload=payload)


def _verify_invariance(a: Matrix, spec: JobSpec) -> VerificationReport:
    return verify_invariance(a, build_conjugator(spec))


VERIFIERS: Dict[str, Callable[[Matrix, JobSpec], VerificationReport]] = {
    "prop21": lambda a, spec: verify_prop21(a),
    "thm22": lambda a, spec: verify_thm22(a),
    "thm31": lambda a, spec: verify_thm31(a),
    "invariance": _verify_invariance,
    "sandwich-product": lambda a, spec: sandwich_product_identity(a),
}


def cmd_verify(args, settings: Settings) -> CommandOutput:
    spec, a = load_matrix_job(args.file, settings)
    report = _timed(args, lambda: VERIFIERS[args.claim](a, spec))
    if not report.holds:
        logger.warning("%s violated over %s", report.claim, a.ring.label)
    return _report_output([report])


def cmd_oracle(args, settings: Settings) -> CommandOutput:
    """Commutative cross-check of A*, sdet and lambda_i against sympy's det, adjugate and charpoly."""
    ring = ring_from_name(args.ring, args.generators)
    if not ring.is_commutative:
        raise NcchError(f"the oracle needs a commutative ring, not {ring.label}")
    rng = random.Random(args.seed)
    n = args.n

    def run_trials() -> VerificationReport:
        failures: List[str] = []
        for trial in range(args.trials):
            a = random_matrix(ring, n, rng, max_degree=1)
            if preadjoint(a) != classical_adjugate(a) * math.factorial(n - 1):
                failures.append(f"trial {trial}: preadjoint differs from (n-1)! adj(A)")
            if sdet(a) != classical_det(a) * math.factorial(n):
                failures.append(f"trial {trial}: sdet differs from n! det(A)")
            expected = [c * math.factorial(n) for c in classical_charpoly(a)]
            if list(symmetric_charpoly(a)) != expected:
                failures.append(f"trial {trial}: lambda_i differ from n! times the classical coefficients")
        return VerificationReport.from_residuals(
            "oracle commutative", {}, failures, stats={"n": n, "ring": ring.label, "trials": args.trials}
        )

    return _report_output([_timed(args, run_trials)])


def cmd_ideal_membership(args, settings: Settings) -> CommandOutput:
    _, a = load_matrix_job(args.file, settings)
    report = _timed(args, lambda: certify_sandwich(a, allow_large=settings.enable_n3_certification))
    return _report_output([report])


def _emit_job(spec: JobSpec, output) -> CommandOutput:
    if output:
        save_job(spec, Path(output))
        return CommandOutput(lines=[f"wrote {output}"], payload={"path": str(output)})
    return CommandOutput(lines=spec.to_json().rstrip("\n").splitlines(), payload=spec.to_mapping())


def cmd_gen(args, settings: Settings) -> CommandOutput:
    if args.kind == "generic":
        spec = generate_generic_job(args.n, args.prefix)
    else:
        ring = ring_from_name(args.ring, args.generators, settings.grassmann_generators)
        spec = generate_random_job(ring, args.n, args.seed)
    return _emit_job(spec, args.output)


def cmd_identities(args, settings: Settings) -> CommandOutput:
    """Survey of the named identities on one ring; violations here are findings, not failures."""
    ring = ring_from_name(args.ring, args.generators, settings.grassmann_generators)
    reports = [
        _timed(args, lambda: check_ring_identity(ring, name, args.trials, args.seed)) for name in IDENTITIES
    ]
    out = _report_output(reports, {"ring": ring.label})
    out.exit_code = EXIT_OK
    return out


def cmd_search_witness(args, settings: Settings) -> CommandOutput:
    ring = ring_from_name(args.ring, args.generators, settings.grassmann_generators)
    search = search_sandwich_witness(ring, args.n, args.trials, args.seed)
    lines = [f"sandwich witness search over {ring.label}, n={args.n}: "
             f"{'found' if search.found else 'none'} after {search.trials_run} trials"]
    payload: Dict[str, Any] = {"ring": ring.label, "n": args.n, "trials_run": search.trials_run, "found": search.found}
    if search.found:
        lines.extend(_matrix_block("A", search.witness))
        lines.extend(search.report.summary_lines())
        payload["matrix"] = search.witness.to_strings()
        payload["report"] = search.report.to_dict()
    return CommandOutput(lines=lines, payload=payload)


def cmd_perturb_lambda(args, settings: Settings) -> CommandOutput:
    """Rerun the right/left identity check with lambda_index shifted by one."""
    _, a = load_matrix_job(args.file, settings)
    result = decompose_thm22(a)
    if not 0 <= args.index <= a.n:
        raise NcchError(f"--index must lie in 0..{a.n}")
    lambdas = list(result.lambdas)
    lambdas[args.index] = lambdas[args.index] + Element.one(a.ring)
    perturbed = dataclasses.replace(result, lambdas=tuple(lambdas))
    report = _timed(args, lambda: verify_thm22(a, perturbed))
    return _report_output([report], {"perturbed_index": args.index})


def ring_choices() -> List[str]:
    return [k.value for k in RingKind]
