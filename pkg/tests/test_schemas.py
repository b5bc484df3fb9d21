"""
Unit tests for colorweight.schemas module.

Tests cover:
- Polynomial and Jacobi diagram wire models
- AlgebraSpec validation
- VerificationReport verdicts
- CacheSettings and RunConfig
"""

import pytest
from pydantic import ValidationError

from colorweight.schemas import (
    CACHE_BYTES_ENV,
    DEFAULT_CACHE_BYTES,
    AlgebraSpec,
    BasisSpec,
    CacheSettings,
    CenterPolyTerm,
    CheckResult,
    CircleEndpoint,
    JacobiSpec,
    RunConfig,
    VerificationReport,
    VertexEndpoint,
)

# ============================================================================
# Wire Model Tests
# ============================================================================


class TestWireModels:
    """Test suite for the JSON input models."""

    @pytest.mark.unit
    def test_term_rejects_negative_exponent(self):
        """Test that exponents must be non-negative."""
        with pytest.raises(ValidationError):
            CenterPolyTerm(c=-1, y=0, a=1, b=0)

    @pytest.mark.unit
    def test_jacobi_spec_from_fixture(self, load_fixture):
        """Test parsing the tripod description."""
        spec = JacobiSpec.model_validate(load_fixture("tripod.json"))

        assert spec.legs == 3
        assert [v.id for v in spec.vertices] == ["v"]
        assert spec.edges[0] == (CircleEndpoint(circle=0), VertexEndpoint(vertex="v", slot=0))

    @pytest.mark.unit
    def test_vertex_slot_range(self):
        """Test that a trivalent vertex only has slots 0, 1 and 2."""
        with pytest.raises(ValidationError):
            VertexEndpoint(vertex="v", slot=3)

    @pytest.mark.unit
    def test_jacobi_spec_forbids_extra_keys(self):
        """Test that misspelt keys are not ignored."""
        with pytest.raises(ValidationError):
            JacobiSpec.model_validate({"legs": 0, "vertexes": []})


# ============================================================================
# AlgebraSpec Tests
# ============================================================================


class TestAlgebraSpec:
    """Test suite for algebra descriptions."""

    @pytest.mark.unit
    def test_fixture_loads(self, load_fixture):
        """Test the A1_e fixture."""
        spec = AlgebraSpec.model_validate(load_fixture("a1_epsilon.json"))

        assert [b.name for b in spec.basis] == ["H", "Q1", "Q2", "Q3"]
        assert spec.structure_constants[2] == (2, 3, 1, (0, 1))
        assert spec.factor == "graded_lie"

    @pytest.mark.unit
    def test_degree_must_be_in_z2(self):
        """Test that degree components are 0 or 1."""
        with pytest.raises(ValidationError, match="must be 0 or 1"):
            BasisSpec(name="X", degree=(2, 0))

    @pytest.mark.unit
    def test_structure_constant_index_range(self):
        """Test that structure constants refer to existing basis elements."""
        with pytest.raises(ValidationError, match="out of range"):
            AlgebraSpec(
                basis=[BasisSpec(name="X", degree=(0, 0))],
                structure_constants=[(0, 0, 1, 1)],
            )

    @pytest.mark.unit
    def test_form_shape(self):
        """Test that the form must be square of the basis size."""
        with pytest.raises(ValidationError, match="2x2"):
            AlgebraSpec(
                basis=[BasisSpec(name="X", degree=(0, 0)), BasisSpec(name="Z", degree=(1, 0))],
                form=[[1, 0]],
            )


# ============================================================================
# VerificationReport Tests
# ============================================================================


class TestVerificationReport:
    """Test suite for suite verdicts."""

    @pytest.mark.unit
    def test_report_only_checks_do_not_fail(self):
        """Test that a failing non-assertive check leaves the verdict passed."""
        report = VerificationReport(
            suite="props",
            checks=[
                CheckResult(name="closed forms", passed=True, instances=6),
                CheckResult(name="multiplicativity", passed=False, assertive=False),
            ],
        )
        assert report.passed

    @pytest.mark.unit
    def test_assertive_failure_fails(self):
        """Test that a failing assertive check fails the suite."""
        report = VerificationReport(
            suite="4t",
            checks=[CheckResult(name="4T", passed=False, failure="1 2 1 2")],
        )
        assert not report.passed

    @pytest.mark.unit
    def test_empty_report_passes(self):
        """Test that a report with no checks is vacuously passed."""
        assert VerificationReport(suite="axioms").passed


# ============================================================================
# Configuration Tests
# ============================================================================


class TestCacheSettings:
    """Test suite for environment-driven cache settings."""

    @pytest.mark.unit
    def test_default_when_unset(self, monkeypatch):
        """Test the default cache size."""
        monkeypatch.delenv(CACHE_BYTES_ENV, raising=False)
        assert CacheSettings.from_env().max_bytes == DEFAULT_CACHE_BYTES

    @pytest.mark.unit
    def test_reads_environment(self, monkeypatch):
        """Test that the environment variable overrides the default."""
        monkeypatch.setenv(CACHE_BYTES_ENV, " 4096 ")
        assert CacheSettings.from_env().max_bytes == 4096

    @pytest.mark.unit
    def test_blank_is_default(self, monkeypatch):
        """Test that an empty variable falls back to the default."""
        monkeypatch.setenv(CACHE_BYTES_ENV, "")
        assert CacheSettings.from_env().max_bytes == DEFAULT_CACHE_BYTES

    @pytest.mark.unit
    def test_rejects_garbage(self, monkeypatch):
        """Test that a non-numeric size is refused."""
        monkeypatch.setenv(CACHE_BYTES_ENV, "lots")
        with pytest.raises(ValidationError):
            CacheSettings.from_env()


class TestRunConfig:
    """Test suite for CLI option validation."""

    @pytest.mark.unit
    def test_weight_needs_input(self):
        """Test that weight without a diagram is rejected."""
        with pytest.raises(ValidationError, match="needs --diagram or --file"):
            RunConfig(command="weight")

    @pytest.mark.unit
    def test_table_needs_order(self):
        """Test that table without an order is rejected."""
        with pytest.raises(ValidationError, match="needs an order"):
            RunConfig(command="table")

    @pytest.mark.unit
    def test_table_order_range(self):
        """Test the supported table orders."""
        with pytest.raises(ValidationError):
            RunConfig(command="table", order=7)

    @pytest.mark.unit
    def test_verify_needs_suite(self):
        """Test that verify without a suite is rejected."""
        with pytest.raises(ValidationError, match="needs a suite"):
            RunConfig(command="verify")

    @pytest.mark.unit
    @pytest.mark.parametrize(("epsilon", "value"), [("sym", None), ("+1", 1), ("-1", -1)])
    def test_eps_value(self, epsilon, value):
        """Test the mapping from the --epsilon choice to a specialisation."""
        cfg = RunConfig(command="weight", diagram="1 1", epsilon=epsilon)
        assert cfg.eps_value == value

    @pytest.mark.unit
    def test_defaults(self):
        """Test the default options of an evaluation."""
        cfg = RunConfig(command="weight", diagram="1 2 1 2")

        assert cfg.method == "recurrence"
        assert cfg.format == "text"
        assert cfg.cut == 0
        assert not cfg.deframed

    @pytest.mark.unit
    def test_unknown_option_rejected(self):
        """Test that stray options are not silently accepted."""
        with pytest.raises(ValidationError):
            RunConfig(command="weight", diagram="1 1", colour="red")
