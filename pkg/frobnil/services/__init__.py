# Services package
from .cache import RedisCache
from .operations import (
    act_expression, check_size, dual_basis_lines, graded_terms, nakayama_lines,
    normalize_expression, tau_lines,
)
from .verification import VerificationService, run_isomorphism_check, run_trace_change, run_verification

__all__ = [
    "RedisCache", "VerificationService",
    "act_expression", "check_size", "dual_basis_lines", "graded_terms", "nakayama_lines",
    "normalize_expression", "tau_lines",
    "run_isomorphism_check", "run_trace_change", "run_verification",
]
