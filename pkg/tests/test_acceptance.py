"""Acceptance suite: one class per acceptance criterion.

Each class drives the matching verification suite at desk-scale bounds and
spot-checks the values it is expected to reproduce.

    pytest tests/test_acceptance.py -v
"""

from __future__ import annotations

import pytest
import structlog
from pydantic import ValidationError

from aicrystal.ai_crystal import ai_component, rank4_two_row_table, t_rho
from aicrystal.errors import InvalidQSymbolError
from aicrystal.kmatrix import enumerate_sst_ai
from aicrystal.models import Partition, so_rank
from aicrystal.tableaux import partitions_up_to
from aicrystal.verify import (
    SUITES,
    VerificationReport,
    check,
    no_violations,
    resolve_suites,
    run_suite,
    run_verification,
)
from aicrystal.verify import suites as suites_module
from aicrystal.verify.suites import _rsai_checks


def assert_suite_passes(name: str, **limits: int) -> None:
    results = run_suite(name, **limits)
    failures = [
        f"{r.check}: {r.details or (r.measured, r.expected)}" for r in results if not r.passed
    ]
    assert results
    assert failures == []


# ===========================================================================
# AC-1: Cardinality formulas
# ===========================================================================


class TestAC1_Cardinalities:
    def test_counts_suite(self):
        assert_suite_passes("counts", max_size=6)

    def test_rank3_up_to_ten(self):
        for l in range(11):
            shape = Partition.of(l) if l else Partition()
            assert len(enumerate_sst_ai(3, shape)) == 2 * l + 1


# ===========================================================================
# AC-2: Worked examples
# ===========================================================================


class TestAC2_WorkedExamples:
    def test_examples_suite(self):
        assert_suite_passes("examples")


# ===========================================================================
# AC-3: AI-crystal axioms
# ===========================================================================


class TestAC3_Axioms:
    def test_axioms_suite(self):
        assert_suite_passes("axioms", max_n=5, max_size=5)


# ===========================================================================
# AC-4 / AC-5: Connectedness, singular elements and characters
# ===========================================================================


class TestAC4_Connectedness:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_connected_from_t_rho(self, n):
        for rho in partitions_up_to(5, so_rank(n)):
            assert set(ai_component(t_rho(n, rho))) == set(enumerate_sst_ai(n, rho))


class TestAC5_Theorem:
    def test_theorem_suite(self):
        assert_suite_passes("theorem", max_n=5, max_size=4)


# ===========================================================================
# AC-6 / AC-7: K-structure and closed-form tables
# ===========================================================================


class TestAC6_KStructure:
    def test_kmatrix_suite(self):
        assert_suite_passes("kmatrix", max_n=4, max_size=5)


class TestAC7_LowRank:
    def test_lowrank_suite(self):
        assert_suite_passes("lowrank", max_size=4)

    def test_two_row_table_is_exhaustive(self):
        table = rank4_two_row_table(3, 2)
        assert len(table.elements) == 2 * (3 - 2 + 1) * (3 + 2 + 1)


# ===========================================================================
# AC-8 / AC-9 / AC-10: RS^AI, step decomposition, branching
# ===========================================================================


class TestAC8_RSAI:
    def test_rsai_suite(self):
        assert_suite_passes("rsai", max_n=4, max_len=4)

    def test_rank3_words_of_length_five(self):
        results = _rsai_checks(3, 5)
        assert [r for r in results if not r.passed] == []
        assert {r.check for r in results} >= {"injective_n3_d5", "decode_n3_d5"}

    def test_undecodable_walk_fails_its_check(self, monkeypatch):
        def reject(q, n):
            raise InvalidQSymbolError("mark without a partner")

        monkeypatch.setattr(suites_module, "q_to_ot", reject)
        results = {r.check: r for r in _rsai_checks(3, 2)}
        assert not results["decode_n3_d2"].passed
        assert "mark without a partner" in results["decode_n3_d2"].details
        assert results["injective_n3_d2"].passed


class TestAC9_StepDecomposition:
    def test_decomposition_suite(self):
        assert_suite_passes("decomposition", max_n=5, max_size=3)


class TestAC10_Branching:
    def test_branching_suite(self):
        assert_suite_passes("branching", max_n=4, max_size=5)


# ===========================================================================
# Runner and report
# ===========================================================================


class TestRunner:
    def test_resolve_all(self):
        assert resolve_suites(None) == list(SUITES)
        assert resolve_suites([]) == list(SUITES)
        assert resolve_suites(["rsai", "all"]) == list(SUITES)

    def test_resolve_keeps_registry_order(self):
        assert resolve_suites(["branching", "examples"]) == ["examples", "branching"]

    def test_resolve_unknown(self):
        with pytest.raises(KeyError, match="nope"):
            resolve_suites(["nope"])

    def test_run_verification(self):
        report = run_verification(["examples", "counts"], threads=2, max_size=3)
        assert report.suites == ["examples", "counts"]
        assert report.all_passed
        assert report.summary()["failed"] == 0
        assert report.to_text().splitlines()[-1] == "all passed"

    def test_crash_becomes_failed_check(self, monkeypatch):
        def boom(limits):
            raise RuntimeError("broken suite")

        monkeypatch.setitem(SUITES, "examples", boom)
        results = run_suite("examples")
        assert len(results) == 1
        assert results[0].check == "completed"
        assert not results[0].passed
        assert "broken suite" in results[0].details

    def test_bad_bounds_raise_and_leave_no_context(self):
        with pytest.raises(ValidationError):
            run_suite("examples", max_n=2)
        assert structlog.contextvars.get_contextvars() == {}

    def test_context_cleared_after_crash(self, monkeypatch):
        def boom(limits):
            raise RuntimeError("broken suite")

        monkeypatch.setitem(SUITES, "examples", boom)
        run_suite("examples")
        assert structlog.contextvars.get_contextvars() == {}


class TestReport:
    def test_failure_rendering(self):
        report = VerificationReport(suites=["counts"])
        report.add(check("counts", "sst3_ai_1", 4, 3))
        report.add(no_violations("counts", "listing", ["a", "b", "c", "d", "e"]))
        report.add(check("counts", "sst3_ai_0", 1, 1))
        report.finalize()
        assert not report.all_passed
        lines = report.to_text().splitlines()
        assert lines[0] == "counts: FAIL (1/3 checks)"
        assert lines[1] == "  FAILED counts.sst3_ai_1 (expected 3, got 4)"
        assert lines[2] == "  FAILED counts.listing: a; b; c; ... 2 more"
        assert lines[-1] == "verification failed"
        summary = report.summary()
        assert summary["total_checks"] == 3
        assert summary["failed"] == 2
        assert summary["failures"][0]["measured"] == "4"
