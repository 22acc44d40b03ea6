"""
Random linear changes of coordinates into quasi stable or strongly stable position.

Almost every change works; each candidate is verified exactly on LT of the
transformed ideal, and the coefficient range doubles after every failed draw.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from django.conf import settings

from .exceptions import TransformationError
from .groebner import GroebnerBasis, buchberger
from .ring import LinearChange, Polynomial, apply_linear_change, require_homogeneous
from .stability import (
    MonomialIdeal,
    is_quasi_stable,
    is_strongly_stable,
    leading_ideal,
)

logger = logging.getLogger(__name__)


class Position(str, Enum):
    QUASI_STABLE = "quasi"
    STRONGLY_STABLE = "strong"

    def holds(self, J: MonomialIdeal) -> bool:
        if self is Position.STRONGLY_STABLE:
            return is_strongly_stable(J)
        return is_quasi_stable(J)


@dataclass(frozen=True)
class PositionResult:
    change: LinearChange
    generators: Tuple[Polynomial, ...]
    basis: GroebnerBasis
    leading_ideal: MonomialIdeal
    retries: int


def transform_to_position(
    generators: Sequence[Polynomial],
    target: Position,
    seed=0,
    allow_identity: bool = True,
    coeff_bound: Optional[int] = None,
    max_retries: Optional[int] = None,
) -> PositionResult:
    """
    (A, A.I) with LT(A.I) in the target position. `seed` is an int or a numpy Generator;
    the identity is tried first when `allow_identity` is set.
    """
    n = require_homogeneous(generators)
    target = Position(target)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    bound = settings.STABLEGB_COEFF_BOUND if coeff_bound is None else coeff_bound
    retries = settings.STABLEGB_TRANSFORM_RETRIES if max_retries is None else max_retries

    if allow_identity:
        basis, _ = buchberger(generators)
        J = leading_ideal(basis.generators, n)
        if target.holds(J):
            return PositionResult(LinearChange.identity(n), tuple(generators), basis, J, 0)

    obstruction = None
    for attempt in range(retries + 1):
        change = LinearChange.random(n, rng, bound)
        transformed = tuple(apply_linear_change(change, f) for f in generators)
        basis, _ = buchberger(transformed)
        J = leading_ideal(basis.generators, n)
        if target.holds(J):
            if attempt:
                logger.info(f"Reached {target.value} position after {attempt} retries")
            return PositionResult(change, transformed, basis, J, attempt)
        obstruction = J
        logger.info(f"Change {attempt} missed {target.value} position, bound {bound} -> {2 * bound}")
        bound *= 2
    raise TransformationError(
        f"no {target.value} stable position after {retries} retries", obstruction, retries
    )
