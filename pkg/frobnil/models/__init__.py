# Models package
from .algebra import AlgebraConfig, AlgebraSummary, BasisEntry, MultEntry
from .api import (
    ActRequest, DegreeResponse, ElementResponse, GradedTerm, NormalizeRequest,
    ObjectResponse, VerifyRequest,
)
from .report import CacheInfo, CheckResult, ValidationReport, VerificationReport

__all__ = [
    "AlgebraConfig", "AlgebraSummary", "BasisEntry", "MultEntry",
    "ActRequest", "DegreeResponse", "ElementResponse", "GradedTerm",
    "NormalizeRequest", "ObjectResponse", "VerifyRequest",
    "CacheInfo", "CheckResult", "ValidationReport", "VerificationReport",
]
