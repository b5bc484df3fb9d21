"""
Tests for colorweight.suites module.

Tests cover:
- The suite registry and run_suite
- Every suite at small orders
- Exhaustive sweeps (marked slow)
"""

import pytest

from colorweight.diagram import parse_chord
from colorweight.poly import EPS, C, Y
from colorweight.suites import SUITES, CachedOracle, FourTermSuite, run_suite

# ============================================================================
# Registry Tests
# ============================================================================


class TestRegistry:
    """Test suite for looking up and configuring suites."""

    @pytest.mark.unit
    def test_suite_names(self):
        """Test that every CLI suite name is registered."""
        assert set(SUITES) == {
            "axioms",
            "4t",
            "stu",
            "cut",
            "deframe",
            "props",
            "oracle",
            "tenrel",
            "reflect",
        }

    @pytest.mark.unit
    def test_unknown_suite(self):
        """Test that an unknown name is rejected."""
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("5t")

    @pytest.mark.unit
    def test_params_reach_the_suite(self, system):
        """Test that set_params configures a suite before it runs."""
        suite = FourTermSuite(system=system, max_order=2)
        suite.set_params(max_order=3)

        report = suite()

        assert report.checks[0].instances == 8 + 60
        assert suite.get_params()["max_order"] == 3

    @pytest.mark.unit
    def test_cached_oracle(self, envelope):
        """Test that rotated diagrams share one oracle evaluation."""
        oracle = CachedOracle(envelope)

        assert oracle(parse_chord("1 2 1 2")) == C**2 - EPS * Y
        assert oracle(parse_chord("2 1 2 1")) == C**2 - EPS * Y
        assert len(oracle._values) == 1


# ============================================================================
# Suite Run Tests
# ============================================================================


class TestSuites:
    """Test suite for running each verification suite at small orders."""

    @pytest.mark.unit
    def test_axioms(self):
        """Test the algebraic identities."""
        report = run_suite("axioms")

        assert report.passed
        assert report.suite == "axioms"
        assert "Casimir and y central" in [check.name for check in report.checks]

    @pytest.mark.unit
    def test_four_term(self):
        """Test the 4T relation up to order 3."""
        assert run_suite("4t", max_order=3).passed

    @pytest.mark.unit
    def test_stu(self):
        """Test Jacobi values and STU consistency up to order 3."""
        report = run_suite("stu", max_order=3)

        assert report.passed
        assert [check.name for check in report.checks] == [
            "jacobi values",
            "resolution order",
            "chord diagrams as jacobi diagrams",
            "vertex antisymmetry",
        ]

    @pytest.mark.unit
    def test_deframe(self):
        """Test the deframing identities up to order 3."""
        assert run_suite("deframe", max_order=3).passed

    @pytest.mark.unit
    def test_props(self):
        """Test the structural properties with one spectator chord."""
        report = run_suite("props", max_order=2, max_spectators=1)

        assert report.passed
        multiplicativity = next(c for c in report.checks if "multiplicativity" in c.name)
        assert not multiplicativity.assertive

    @pytest.mark.unit
    def test_oracle(self):
        """Test normal ordering and the oracle up to order 3."""
        assert run_suite("oracle", max_order=3, word_length=3).passed

    @pytest.mark.unit
    def test_tenrel_with_recurrence(self):
        """Test the four-chord identities evaluated by the recurrence."""
        report = run_suite("tenrel", max_order=2, evaluator="recurrence", max_spectators=1)

        assert report.passed
        assert [check.name for check in report.checks] == ["ten1", "ten2", "ten3", "ten4"]

    @pytest.mark.unit
    def test_report_only_suites_pass(self):
        """Test that the cut and mirror scans never fail a run."""
        for name in ("cut", "reflect"):
            report = run_suite(name, max_order=2)

            assert report.passed
            assert not any(check.assertive for check in report.checks)


# ============================================================================
# Exhaustive Sweeps
# ============================================================================


class TestSweeps:
    """Test suite for the full-size sweeps."""

    @pytest.mark.slow
    def test_four_term_order_five(self):
        """Test the 4T relation up to order 5."""
        assert run_suite("4t", max_order=5).passed

    @pytest.mark.slow
    def test_oracle_default_order(self):
        """Test the oracle against the recurrence up to order 4."""
        assert run_suite("oracle", max_order=4).passed

    @pytest.mark.slow
    def test_tenrel_with_oracle(self):
        """Test the four-chord identities evaluated in the enveloping algebra."""
        assert run_suite("tenrel", max_spectators=2, evaluator="oracle").passed

    @pytest.mark.slow
    def test_props_full(self):
        """Test the structural properties with two spectators."""
        assert run_suite("props", max_order=4).passed
