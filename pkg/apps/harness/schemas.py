from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from apps.algebra.transform import Position

PASS = "PASS"
FAIL = "FAIL"
INCOMPLETE = "INCOMPLETE"


@dataclass
class TheoremCheck:
    theorem: str
    applicable: bool
    holds: Optional[bool] = None  # only set when applicable
    lhs: Any = None
    rhs: Any = None
    reason: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)
    # reported next to its printed bound; never fails a report
    gating: bool = True


@dataclass
class VerificationReport:
    ideal_id: str
    status: str  # "PASS", "FAIL" or "INCOMPLETE"
    n: int = 0
    seed: int = 0
    position: Dict[str, bool] = field(default_factory=dict)
    quantities: Dict[str, Any] = field(default_factory=dict)
    checks: List[TheoremCheck] = field(default_factory=list)
    reasons: List[str] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def failed_checks(self) -> List[TheoremCheck]:
        return [c for c in self.checks if c.gating and c.applicable and not c.holds]


@dataclass
class CorpusSpec:
    n_min: int = 2
    n_max: int = 4
    d_min: int = 1
    d_max: int = 4
    k_min: int = 1
    k_max: int = 4
    count: int = 200
    seed: int = 0
    # None alternates between the two targets
    target: Optional[Position] = None


@dataclass
class FixtureExpectation:
    label: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class FixtureOutcome:
    name: str
    expectations: List[FixtureExpectation] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return PASS if all(e.ok for e in self.expectations) else FAIL

    def expect(self, label: str, expected, actual):
        self.expectations.append(FixtureExpectation(label, expected, actual))
