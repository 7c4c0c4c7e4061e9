import asyncio
from pathlib import Path

import pytest

from frobnil.algebra.frobenius import builtin
from frobnil.algebra.linear import Element
from frobnil.exceptions import IndexOutOfRange, SizeTooLarge
from frobnil.services.verification import (
    VerificationService, run_isomorphism_check, run_trace_change, run_verification,
)
from frobnil.textio import load_config

QUICK = dict(seed=0, degree_cap=2, samples=15)


class MemoryCache:
    """Stands in for Redis."""

    def __init__(self):
        self.data = {}

    def is_available(self):
        return True

    async def get(self, key):
        return self.data.get(key)

    async def set(self, key, value, ttl_seconds=None):
        self.data[key] = value
        return True


class TestRunVerification:
    """Every applicable suite for one (algebra, n)."""

    @pytest.mark.parametrize("name", ["ground", "clifford_odd", "clifford_even", "dual_numbers", "cyclic_group(2)"])
    def test_builtins_pass_on_two_strands(self, name):
        """No suite fails for the built-ins at n = 2."""
        report = run_verification(builtin(name), 2, **QUICK)
        assert report.passed, [s.name for s in report.failed_suites()]
        assert report.algebra == name
        assert report.n == 2

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["ground", "clifford_odd", "cyclic_group(3)"])
    def test_builtins_pass_on_three_strands(self, name):
        """No suite fails for the built-ins at n = 3."""
        assert run_verification(builtin(name), 3, **QUICK).passed

    def test_nonsymmetric_algebra_skips_nilhecke(self):
        """clifford_even reports the nilHecke suites as skipped."""
        report = run_verification(builtin("clifford_even"), 2, **QUICK)
        skipped = [s for s in report.suites if s.name == "nilhecke suites"]
        assert len(skipped) == 1
        assert skipped[0].informational
        assert "not symmetric" in skipped[0].detail

    def test_supersymmetry_is_informational(self):
        """A nonsymmetric trace does not fail the report."""
        report = run_verification(builtin("clifford_even"), 2, **QUICK)
        check = next(s for s in report.suites if s.name == "supersymmetry")
        assert not check.passed
        assert check.informational

    def test_z_degree_is_enforced_when_d_is_zero(self):
        """With d = 0 the grading is additive and the suite is a hard check."""
        report = run_verification(builtin("clifford_odd"), 2, **QUICK)
        check = next(s for s in report.suites if s.name == "Z-degree of products")
        assert check.passed
        assert not check.informational

    def test_z_degree_is_informational_when_d_is_nonzero(self):
        """The dual numbers have d = 2; mixed degrees are reported without failing the run."""
        report = run_verification(builtin("dual_numbers"), 2, **QUICK)
        check = next(s for s in report.suites if s.name == "Z-degree of products")
        assert check.informational
        assert "d = 2" in check.detail
        assert report.passed

    def test_odd_trace_degree_config_passes(self):
        """algebras/odd_dual_numbers.alg has d = 1 and still verifies."""
        A = load_config(Path(__file__).parent / "algebras" / "odd_dual_numbers.alg")
        report = run_verification(A, 2, **QUICK)
        assert report.passed, [s.name for s in report.failed_suites()]
        assert next(s for s in report.suites if s.name == "Z-degree of products").informational

    def test_witness_covers_token_monomials(self):
        """y (x) y is the only witness word; it meets every b x^k with |k| <= 2."""
        report = run_verification(builtin("dual_numbers"), 2, **QUICK)
        check = next(s for s in report.suites if s.name == "non-faithfulness witnesses")
        assert check.passed
        assert check.detail == "1 witness words"
        # one nonvanishing check, then 4 words times 6 exponent vectors
        assert check.instances == 1 + 4 * 6

    def test_clifford_bridge_runs_for_clifford_odd(self):
        """The isomorphism suites are included for Cl with the odd trace."""
        names = [s.name for s in run_verification(builtin("clifford_odd"), 2, **QUICK).suites]
        assert "clifford isomorphism round trip" in names
        assert "clifford isomorphism products" in names

    def test_same_seed_same_report(self):
        """Runs are reproducible from the seed."""
        first = run_verification(builtin("dual_numbers"), 2, **QUICK)
        second = run_verification(builtin("dual_numbers"), 2, **QUICK)
        assert [(s.name, s.instances, s.passed) for s in first.suites] == \
            [(s.name, s.instances, s.passed) for s in second.suites]

    def test_size_guard(self):
        """n beyond FROBNIL_MAX_STRANDS is refused."""
        with pytest.raises(SizeTooLarge):
            run_verification(builtin("ground"), 5, **QUICK)

    def test_needs_a_strand(self):
        with pytest.raises(IndexOutOfRange):
            run_verification(builtin("ground"), 0, **QUICK)


class TestOtherRuns:
    """The isomorphism check and trace changes."""

    def test_isomorphism_check(self):
        """NH_2(Cl) and ONH_2 (x) Cl^2 agree."""
        report = run_isomorphism_check(2, **QUICK)
        assert report.passed
        assert report.algebra == "clifford_odd"

    def test_trace_change(self):
        """tr(- g) on the cyclic group of order 2."""
        assert run_trace_change(builtin("cyclic_group(2)"), Element({1: 1}), 2).passed


class TestVerificationService:
    """Cached reports for the HTTP API."""

    def test_second_request_hits_cache(self):
        """The stored report comes back with cache info."""
        service = VerificationService(MemoryCache())
        A = builtin("ground")
        first = asyncio.run(service.verify(A, 2, seed=0, degree_cap=2))
        second = asyncio.run(service.verify(A, 2, seed=0, degree_cap=2))
        assert first.cache_info.source == "computed"
        assert not first.cache_info.hit
        assert second.cache_info.source == "cache"
        assert second.cache_info.hit
        assert second.suites == first.suites
        assert second.passed

    def test_cache_key_includes_parameters(self):
        """A different seed is computed afresh."""
        cache = MemoryCache()
        service = VerificationService(cache)
        A = builtin("ground")
        asyncio.run(service.verify(A, 2, seed=0, degree_cap=2))
        report = asyncio.run(service.verify(A, 2, seed=1, degree_cap=2))
        assert report.cache_info.source == "computed"
        assert len(cache.data) == 2

    def test_corrupt_cache_entry_is_recomputed(self):
        """Unreadable cached text falls back to a fresh run."""
        cache = MemoryCache()
        cache.data["frobnil:verify:ground:2:0:2"] = "{not json"
        report = asyncio.run(VerificationService(cache).verify(builtin("ground"), 2, seed=0, degree_cap=2))
        assert report.cache_info.source == "computed"
        assert report.passed
