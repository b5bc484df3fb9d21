"""
Unit tests for colorweight.utils module.

Tests cover:
- BaseSuite parameters, check collection and failure logging
- Verboser decorator
"""

import logging

import pytest

from colorweight.schemas import CheckResult, VerificationReport
from colorweight.utils import BaseSuite, Verboser


def passing(name: str = "ok") -> CheckResult:
    return CheckResult(name=name, passed=True, instances=1)


# ============================================================================
# BaseSuite Tests
# ============================================================================


class TestBaseSuite:
    """Test suite for BaseSuite class."""

    @pytest.mark.unit
    def test_base_suite_initialization(self):
        """Test that BaseSuite can be instantiated with its defaults."""
        suite = BaseSuite()

        assert suite.max_order == 4
        assert suite.checks == []

    @pytest.mark.unit
    def test_set_params(self):
        """Test that set_params correctly sets attributes."""
        suite = BaseSuite()
        suite.max_spectators = 2

        suite.set_params(max_order=6, max_spectators=1)

        assert suite.max_order == 6
        assert suite.max_spectators == 1

    @pytest.mark.unit
    def test_set_params_only_existing_attributes(self):
        """Test that set_params only updates existing attributes."""
        suite = BaseSuite()

        suite.set_params(max_order=3, new_param="should_not_exist")

        assert suite.max_order == 3
        assert not hasattr(suite, "new_param")

    @pytest.mark.unit
    def test_get_params(self):
        """Test that get_params returns public parameters only."""
        suite = BaseSuite(max_order=2)
        suite._private_param = "private"

        params = suite.get_params()

        assert params == {"max_order": 2}

    @pytest.mark.unit
    def test_call_not_implemented(self):
        """Test that a suite without checks cannot run."""
        with pytest.raises(NotImplementedError, match="BaseSuite registers no checks"):
            BaseSuite()()

    @pytest.mark.unit
    def test_reports_are_flattened(self):
        """Test that checks returning whole reports contribute every result."""

        class PairSuite(BaseSuite):
            name = "pair"

            def __init__(self):
                super().__init__()
                self.checks = [
                    ("single", lambda: passing("single")),
                    (
                        "nested",
                        lambda: VerificationReport(
                            suite="inner", checks=[passing("a"), passing("b")]
                        ),
                    ),
                ]

        report = PairSuite()()

        assert report.suite == "pair"
        assert [check.name for check in report.checks] == ["single", "a", "b"]
        assert report.passed

    @pytest.mark.unit
    def test_failure_levels(self, caplog):
        """Test that assertive failures log errors and report-only ones warnings."""

        class FailingSuite(BaseSuite):
            name = "failing"

            def __init__(self):
                super().__init__()
                self.checks = [
                    ("hard", lambda: CheckResult(name="hard", passed=False, failure="x")),
                    (
                        "soft",
                        lambda: CheckResult(name="soft", passed=False, failure="y", assertive=False),
                    ),
                ]

        with caplog.at_level(logging.WARNING, logger="colorweight.utils"):
            report = FailingSuite()()

        levels = {record.message: record.levelno for record in caplog.records}
        assert levels["failing: hard failed on x"] == logging.ERROR
        assert levels["failing: soft failed on y"] == logging.WARNING
        assert not report.passed


# ============================================================================
# Verboser Decorator Tests
# ============================================================================


class TestVerboser:
    """Test suite for Verboser decorator."""

    @pytest.mark.unit
    def test_verboser_level_0(self):
        """Test Verboser with level 0 (no verbosity)."""

        def check(self):
            return passing()

        assert Verboser(verbosity_level=0)(check) is check

    @pytest.mark.unit
    def test_verboser_level_1(self, caplog):
        """Test Verboser with level 1 (start and finish)."""

        class DummySuite(BaseSuite):
            @Verboser(verbosity_level=1)
            def check(self):
                return passing()

        with caplog.at_level(logging.INFO, logger="colorweight.utils"):
            result = DummySuite().check()

        assert result.passed
        assert any("DummySuite.check started" in record.message for record in caplog.records)
        assert any("DummySuite.check finished" in record.message for record in caplog.records)

    @pytest.mark.unit
    def test_verboser_level_2(self, caplog):
        """Test Verboser with level 2 (arguments and outcome)."""

        class DummySuite(BaseSuite):
            @Verboser(verbosity_level=2)
            def check(self, limit):
                return CheckResult(name="dummy", passed=True, instances=limit)

        with caplog.at_level(logging.DEBUG, logger="colorweight.utils"):
            DummySuite().check(3)

        messages = [record.message for record in caplog.records]
        assert "DummySuite.check input args: (3,), kwargs: {}" in messages
        assert "DummySuite.check output: dummy passed over 3 instances" in messages

    @pytest.mark.unit
    def test_verboser_keeps_name(self):
        """Test that the wrapped method keeps its name."""

        class DummySuite(BaseSuite):
            @Verboser(verbosity_level=1)
            def check_something(self):
                return passing()

        assert DummySuite.check_something.__name__ == "check_something"
