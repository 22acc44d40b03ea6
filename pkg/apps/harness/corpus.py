"""
Seeded random corpus of homogeneous ideals, each moved into its target position.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
from django.conf import settings

from apps.algebra.exceptions import TransformationError, UsageError
from apps.algebra.ring import (
    LinearChange,
    Polynomial,
    RingContext,
    default_ring,
    format_polynomial,
    parse_polynomial,
    terms_of_degree,
)
from apps.algebra.transform import Position, transform_to_position

from .schemas import CorpusSpec

logger = logging.getLogger(__name__)

MAX_TERMS = 3
MAX_COEFFICIENT = 3
MAX_REDRAWS = 10


@dataclass(frozen=True)
class CorpusMember:
    index: int
    ring: RingContext
    original: Tuple[Polynomial, ...]
    target: Position
    change: LinearChange
    generators: Tuple[Polynomial, ...]
    retries: int

    @property
    def ideal_id(self) -> str:
        return f"corpus-{self.index:04d}"

    def to_payload(self) -> Dict:
        """JSON-friendly form, used as Celery task argument."""
        return {
            "index": self.index,
            "names": list(self.ring.names),
            "original": [format_polynomial(f, self.ring) for f in self.original],
            "target": self.target.value,
            "change": [[str(a) for a in row] for row in self.change.matrix],
            "generators": [format_polynomial(f, self.ring) for f in self.generators],
            "retries": self.retries,
        }

    @classmethod
    def from_payload(cls, payload: Dict) -> "CorpusMember":
        names = tuple(payload["names"])
        ring = RingContext(len(names), names)
        return cls(
            index=payload["index"],
            ring=ring,
            original=tuple(parse_polynomial(text, ring) for text in payload["original"]),
            target=Position(payload["target"]),
            change=LinearChange(tuple(tuple(row) for row in payload["change"])),
            generators=tuple(parse_polynomial(text, ring) for text in payload["generators"]),
            retries=payload["retries"],
        )


def validate_spec(spec: CorpusSpec):
    if spec.count < 0:
        raise UsageError("corpus count must be >= 0")
    for low, high, name in (
        (spec.n_min, spec.n_max, "n"),
        (spec.d_min, spec.d_max, "d"),
        (spec.k_min, spec.k_max, "k"),
    ):
        if low < 1 or high < low:
            raise UsageError(f"bad {name} range {low}..{high}")
    if spec.n_max > 4 or spec.d_max > 4:
        logger.warning(f"Corpus beyond desk scale: n <= {spec.n_max}, d <= {spec.d_max}")


def random_form(rng: np.random.Generator, n: int, degree: int) -> Polynomial:
    """A sparse homogeneous form with small nonzero integer coefficients."""
    pool = terms_of_degree(n, degree)
    size = int(rng.integers(1, min(MAX_TERMS, len(pool)) + 1))
    chosen = rng.choice(len(pool), size=size, replace=False)
    coefficients = {}
    for k in sorted(int(c) for c in chosen):
        value = int(rng.integers(1, MAX_COEFFICIENT + 1))
        coefficients[pool[k]] = value if rng.random() < 0.5 else -value
    return Polynomial(n, coefficients)


def _draw(rng: np.random.Generator, spec: CorpusSpec) -> List[Polynomial]:
    n = int(rng.integers(spec.n_min, spec.n_max + 1))
    k = int(rng.integers(spec.k_min, spec.k_max + 1))
    degrees = [int(rng.integers(spec.d_min, spec.d_max + 1)) for _ in range(k)]
    return [random_form(rng, n, s) for s in degrees]


def generate_corpus(spec: CorpusSpec) -> List[CorpusMember]:
    """Deterministic under spec.seed; every member already passed its position check."""
    validate_spec(spec)
    rng = np.random.default_rng(spec.seed)
    members = []
    for index in range(spec.count):
        target = spec.target or (Position.STRONGLY_STABLE if index % 2 == 0 else Position.QUASI_STABLE)
        for redraw in range(MAX_REDRAWS):
            original = _draw(rng, spec)
            try:
                moved = transform_to_position(
                    original, target, rng, coeff_bound=settings.STABLEGB_CORPUS_COEFF_BOUND
                )
            except TransformationError as exc:
                logger.warning(f"Corpus member {index}: {exc}; redrawing")
                continue
            break
        else:
            raise TransformationError(f"corpus member {index} never reached {target.value} position")
        members.append(
            CorpusMember(
                index=index,
                ring=default_ring(original[0].n),
                original=tuple(original),
                target=target,
                change=moved.change,
                generators=moved.generators,
                retries=moved.retries,
            )
        )
    logger.info(f"Generated {len(members)} corpus members from seed {spec.seed}")
    return members
