"""Polynomial identities of the coefficient rings, checked by witness search."""

from __future__ import annotations

import itertools
import logging
import random
from typing import Callable, Dict, Tuple

from ring_core import Element, RingDescriptor, commutator, random_element, ring_basis_generators
from ring_core.errors import NcchError
from identity_verifier.report import VerificationReport

logger = logging.getLogger(__name__)

IdentityFn = Callable[..., Element]

IDENTITIES: Dict[str, Tuple[int, IdentityFn]] = {
    "[x,y][u,v]": (4, lambda x, y, u, v: commutator(x, y) * commutator(u, v)),
    "[[x,y],z]": (3, lambda x, y, z: commutator(commutator(x, y), z)),
    "[[x,y],[u,v]]": (4, lambda x, y, u, v: commutator(commutator(x, y), commutator(u, v))),
    "[x,y][x,z]": (3, lambda x, y, z: commutator(x, y) * commutator(x, z)),
}


def check_ring_identity(ring: RingDescriptor, name: str, trials: int, seed: int = 0) -> VerificationReport:
    """
    Search for arguments on which the named identity is nonzero.

    Tuples of algebra generators are tried first, then ``trials`` random
    tuples. HOLDS means no witness turned up, not a proof.
    """
    if name not in IDENTITIES:
        raise NcchError(f"unknown identity {name!r}; expected one of {sorted(IDENTITIES)}")
    arity, fn = IDENTITIES[name]
    rng = random.Random(seed)

    def candidates():
        basis = ring_basis_generators(ring)
        yield from itertools.product(basis, repeat=arity)
        for _ in range(trials):
            yield tuple(random_element(ring, rng) for _ in range(arity))

    tried = 0
    for args in candidates():
        tried += 1
        value = fn(*args)
        if value:
            logger.warning("identity %s fails over %s", name, ring.label)
            return VerificationReport.from_residuals(
                f"identity {name}",
                {"value": value},
                stats={"ring": ring.label, "tuples_tried": tried},
                details={"witness": [str(a) for a in args]},
            )
    logger.info("identity %s: no witness over %s in %d tuples", name, ring.label, tried)
    return VerificationReport.from_residuals(
        f"identity {name}", {}, stats={"ring": ring.label, "tuples_tried": tried}
    )
