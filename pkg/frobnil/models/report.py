"""Report models shared by validation, verification and the HTTP layer."""

from typing import List, Optional

from pydantic import BaseModel, computed_field


class CheckResult(BaseModel):
    """Outcome of one family of checks."""
    name: str
    passed: bool
    instances: int = 0              # instances evaluated
    failures: List[str] = []        # offending instances as replayable text
    informational: bool = False     # measured and reported, never fails a report
    detail: Optional[str] = None


class ValidationReport(BaseModel):
    """Axiom checks for one Frobenius superalgebra."""
    algebra: str
    checks: List[CheckResult]
    symmetric: bool

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if check.name != "supersymmetry")

    def check(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)


class CacheInfo(BaseModel):
    """Cache performance information."""
    hit: bool                   # True if cache hit, False if cache miss
    response_time_ms: float     # Response time in milliseconds
    source: str                 # "cache" or "computed"


class VerificationReport(BaseModel):
    """All suites run for one (algebra, n) pair."""
    algebra: str
    n: int
    seed: int
    degree_cap: int
    suites: List[CheckResult]
    elapsed_ms: float = 0.0
    cache_info: Optional[CacheInfo] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites if not s.informational)

    def failed_suites(self) -> List[CheckResult]:
        return [s for s in self.suites if not s.passed and not s.informational]
