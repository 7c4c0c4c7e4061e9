"""Verification runs: all suites for one (algebra, n), optionally cached in Redis."""

import asyncio
import logging
import time
from json import JSONDecodeError
from typing import List, Optional

from pydantic import ValidationError

from frobnil.algebra.frobenius import FrobeniusSuperalgebra, builtin
from frobnil.algebra.linear import Element
from frobnil.algebra.nilhecke import check_trace_change
from frobnil.config import settings
from frobnil.exceptions import IndexOutOfRange, SizeTooLarge
from frobnil.models import CacheInfo, CheckResult, VerificationReport
from .cache import RedisCache
from .suites import SuiteContext, algebra_suites, clifford_suites, frobenius_suites, is_clifford_odd


def _context(A: FrobeniusSuperalgebra, n: int, seed: Optional[int], degree_cap: Optional[int],
             samples: Optional[int]) -> SuiteContext:
    if n < 1:
        raise IndexOutOfRange("verification needs n >= 1")
    if n > settings.MAX_STRANDS:
        raise SizeTooLarge(f"n = {n} exceeds FROBNIL_MAX_STRANDS = {settings.MAX_STRANDS}")
    return SuiteContext(
        A,
        n,
        settings.SEED if seed is None else seed,
        settings.DEGREE_CAP if degree_cap is None else degree_cap,
        settings.SAMPLES if samples is None else samples,
    )


def _report(ctx: SuiteContext, suites: List[CheckResult], start_time: float) -> VerificationReport:
    report = VerificationReport(
        algebra=ctx.A.name,
        n=ctx.n,
        seed=ctx.seed,
        degree_cap=ctx.degree_cap,
        suites=suites,
        elapsed_ms=(time.time() - start_time) * 1000,
    )
    failed = len(report.failed_suites())
    logging.info(
        f"Verified {ctx.A.name} at n={ctx.n}: {len(suites) - failed}/{len(suites)} suites pass "
        f"({report.elapsed_ms:.0f} ms)"
    )
    return report


def run_verification(A: FrobeniusSuperalgebra, n: int, seed: Optional[int] = None,
                     degree_cap: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    """Run every suite that applies to (A, n)."""
    start_time = time.time()
    ctx = _context(A, n, seed, degree_cap, samples)
    # supersymmetry only decides whether A is symmetric
    suites = [
        check.model_copy(update={"informational": True}) if check.name == "supersymmetry" else check
        for check in A.report.checks
    ]
    suites += frobenius_suites(ctx)
    suites += algebra_suites(ctx)
    if is_clifford_odd(A):
        suites += clifford_suites(ctx)
    return _report(ctx, suites, start_time)


def run_isomorphism_check(n: int, seed: Optional[int] = None, degree_cap: Optional[int] = None,
                          samples: Optional[int] = None) -> VerificationReport:
    """Only the Clifford bridge suites."""
    start_time = time.time()
    ctx = _context(builtin("clifford_odd"), n, seed, degree_cap, samples)
    return _report(ctx, clifford_suites(ctx), start_time)


def run_trace_change(A: FrobeniusSuperalgebra, u: Element[int], n: int) -> VerificationReport:
    start_time = time.time()
    ctx = _context(A, n, None, None, None)
    return _report(ctx, [check_trace_change(A, u, n)], start_time)


class VerificationService:
    """Verification for the HTTP API, cached per (algebra, n, seed, degree cap)."""

    def __init__(self, cache: RedisCache):
        self.cache = cache

    async def verify(self, A: FrobeniusSuperalgebra, n: int, seed: Optional[int] = None,
                     degree_cap: Optional[int] = None) -> VerificationReport:
        start_time = time.time()
        seed = settings.SEED if seed is None else seed
        degree_cap = settings.DEGREE_CAP if degree_cap is None else degree_cap
        cache_key = f"frobnil:verify:{A.name}:{n}:{seed}:{degree_cap}"

        cached_result = await self.cache.get(cache_key)
        if cached_result:
            try:
                report = VerificationReport.model_validate_json(cached_result)
                report.cache_info = CacheInfo(
                    hit=True, response_time_ms=(time.time() - start_time) * 1000, source="cache"
                )
                return report
            except (JSONDecodeError, ValidationError) as e:
                logging.warning(f"Failed to deserialize cached report {cache_key}: {e}")

        report = await asyncio.to_thread(run_verification, A, n, seed, degree_cap)
        try:
            await self.cache.set(cache_key, report.model_dump_json(exclude={"cache_info"}))
        except (TypeError, ValueError) as e:
            logging.warning(f"Failed to cache report {cache_key}: {e}")
        report.cache_info = CacheInfo(
            hit=False, response_time_ms=(time.time() - start_time) * 1000, source="computed"
        )
        return report
