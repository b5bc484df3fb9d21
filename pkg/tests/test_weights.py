"""
Unit tests for colorweight.weights module.

Tests cover:
- Recurrence values, pivot choice and caching
- Jacobi diagram weights through STU
- Deframing operators and the deframed recurrence
- Closed forms and report-only checks
"""

import pytest

from colorweight.cache import WeightCache
from colorweight.diagram import DiagramSum, dn_diagram, enumerate_diagrams, parse_chord
from colorweight.jacobi import JacobiDiagram, stu_resolve, teeth, tripod, wheel
from colorweight.poly import EPS, ONE, ZERO, C, CenterPoly, Y
from colorweight.schemas import CACHE_BYTES_ENV
from colorweight.suites import JACOBI_VALUES
from colorweight.weights import (
    WeightSystem,
    closed_form_Dn,
    closed_form_teeth,
    deframed_recurrence,
    phi_map,
    s_map,
    select_pivot,
    theta_map,
    weight_jacobi,
    weight_recurrence,
)

# ============================================================================
# Recurrence Tests
# ============================================================================


class TestRecurrence:
    """Test suite for chord diagram weights."""

    @pytest.mark.unit
    def test_golden_values(self, system, chord_table):
        """Test the recurrence on every known weight up to order 4."""
        for code, expected in chord_table.items():
            assert system.weight(parse_chord(code)) == expected, code

    @pytest.mark.unit
    def test_rotation_invariance(self, system):
        """Test that rotated label sequences share a weight."""
        assert system.weight(parse_chord("2 1 2 1 3 3")) == system.weight(parse_chord("1 1 2 3 2 3"))

    @pytest.mark.unit
    def test_every_pivot(self, system, chord_table):
        """Test that the first expansion step may use any chord."""
        for code, expected in chord_table.items():
            d = parse_chord(code)
            for a in d.chords():
                assert system.weight_recurrence(d, pivot=a) == expected, f"{code} pivot {a}"

    @pytest.mark.unit
    def test_bad_pivot(self, system):
        """Test that the pivot must be a chord of the diagram."""
        with pytest.raises(ValueError, match="is not a chord"):
            system.weight_recurrence(parse_chord("1 2 1 2"), pivot=(0, 1))

    @pytest.mark.unit
    def test_select_pivot(self):
        """Test that the least crossed chord is chosen, leftmost first."""
        assert select_pivot(parse_chord("1 1 2 3 2 3")) == (0, 1)
        assert select_pivot(parse_chord("1 2 3 1 2 3")) == (0, 3)
        assert select_pivot(parse_chord("1 2 1 3 2 3")) == (0, 2)

    @pytest.mark.unit
    def test_cache_is_used(self):
        """Test that a repeated evaluation is a cache hit."""
        cache = WeightCache(max_bytes=1 << 20)
        system = WeightSystem(cache=cache)
        d = parse_chord("1 2 3 1 2 3")
        system.weight(d)
        hits = cache.hits
        system.weight(d)

        assert cache.hits == hits + 1
        assert parse_chord("1 2 3 1 2 3") in cache

    @pytest.mark.unit
    def test_disabled_cache(self):
        """Test that weights are still computed with caching switched off."""
        system = WeightSystem(cache=WeightCache(max_bytes=0))

        assert system.weight(parse_chord("1 2 1 2")) == C**2 - EPS * Y
        assert len(system.cache) == 0

    @pytest.mark.unit
    def test_deframed_recurrence_is_memoised(self):
        """Test that the c = 0 recurrence stores its values in its own bounded cache."""
        deframed = WeightCache(max_bytes=1 << 20)
        system = WeightSystem(cache=WeightCache(max_bytes=1 << 20), deframed_cache=deframed)
        d = parse_chord("1 2 3 1 2 3")
        system.deframed_recurrence(d)
        hits = deframed.hits

        assert system.deframed_recurrence(d) == Y * 2
        assert deframed.hits == hits + 1
        assert d in deframed
        assert d not in system.cache

    @pytest.mark.unit
    def test_deframed_cache_follows_the_cap(self, monkeypatch):
        """Test that a zero byte cap also disables the deframed memo."""
        monkeypatch.setenv(CACHE_BYTES_ENV, "0")
        system = WeightSystem()

        assert system.deframed_cache.max_bytes == 0
        assert system.deframed_recurrence(parse_chord("1 2 1 2")) == -EPS * Y
        assert len(system.deframed_cache) == 0

    @pytest.mark.unit
    def test_module_interface(self):
        """Test the functions backed by the default weight system."""
        assert weight_recurrence(parse_chord("1 2 1 2")) == C**2 - EPS * Y
        assert weight_jacobi(tripod()) == EPS * Y
        assert deframed_recurrence(parse_chord("1 2 1 2")) == -EPS * Y


# ============================================================================
# Jacobi Diagram Tests
# ============================================================================


class TestJacobiWeights:
    """Test suite for weights of Jacobi diagrams."""

    @pytest.mark.unit
    @pytest.mark.parametrize(("name", "build", "expected"), JACOBI_VALUES)
    def test_known_values(self, system, name, build, expected):
        """Test the known weights of the standard Jacobi diagrams."""
        assert system.weight_jacobi(build()) == expected

    @pytest.mark.unit
    @pytest.mark.parametrize(("name", "build", "expected"), JACOBI_VALUES)
    def test_resolution_order_is_irrelevant(self, system, name, build, expected):
        """Test that resolving from the last leg gives the same weight."""
        assert system.weight_jacobi(build(), "last") == expected

    @pytest.mark.unit
    def test_wheel_fixture(self, system, load_fixture):
        """Test the stored weight of the five-spoke wheel."""
        expected = CenterPoly.from_json(load_fixture("wheel5_weight.json"))
        assert system.weight_jacobi(wheel(5)) == expected

    @pytest.mark.unit
    def test_chord_diagram_as_jacobi(self, system):
        """Test that a vertex-free Jacobi diagram has its chord weight."""
        d = parse_chord("1 2 3 4 1 2 3 4")
        assert system.weight_jacobi(JacobiDiagram.from_chord(d)) == system.weight(d)

    @pytest.mark.unit
    def test_weight_sum_is_linear(self, system):
        """Test the weight of the tripod's resolution."""
        assert system.weight_sum(stu_resolve(tripod())) == EPS * Y
        assert system.weight_sum(DiagramSum()) == ZERO


# ============================================================================
# Deframing Tests
# ============================================================================


class TestDeframing:
    """Test suite for the deframing operators."""

    @pytest.mark.unit
    def test_s_map(self):
        """Test deleting each chord in turn."""
        s = s_map(parse_chord("1 2 1 3 2 3"))

        assert s.coefficient(parse_chord("1 2 1 2")) == 2
        assert s.coefficient(parse_chord("1 1 2 2")) == 1

    @pytest.mark.unit
    def test_theta_adds_isolated_chord(self, system, chord_table):
        """Test that an isolated chord multiplies the weight by c."""
        for code, expected in chord_table.items():
            assert system.weight(theta_map(parse_chord(code))) == C * expected, code

    @pytest.mark.unit
    def test_phi_kills_single_chord(self):
        """Test that the projection of one chord is zero."""
        assert not phi_map(parse_chord("1 1"))

    @pytest.mark.unit
    def test_phi_of_empty_is_empty(self):
        """Test that the k = 0 term makes phi the identity on the empty diagram."""
        assert phi_map(parse_chord("")) == DiagramSum.of(parse_chord(""))

    @pytest.mark.unit
    def test_deframed_weight(self, system):
        """Test setting c to zero."""
        assert system.deframed_weight(parse_chord("1 2 3 1 2 3")) == Y * 2
        assert system.deframed_weight(parse_chord("1 1")) == ZERO

    @pytest.mark.unit
    def test_phi_gives_deframed_weight(self, system):
        """Test w(phi(D)) = w(D) at c = 0 up to order 4."""
        for n in range(5):
            for d in enumerate_diagrams(n):
                assert system.weight_sum(phi_map(d)) == system.deframed_weight(d), str(d)

    @pytest.mark.unit
    def test_derivative(self, system):
        """Test that differentiating in c deletes one chord."""
        for n in range(5):
            for d in enumerate_diagrams(n):
                assert system.weight(d).d_dc() == system.weight_sum(s_map(d)), str(d)

    @pytest.mark.unit
    def test_deframed_recurrence(self, system):
        """Test the independent deframed recurrence up to order 4."""
        for n in range(5):
            for d in enumerate_diagrams(n):
                assert system.deframed_recurrence(d) == system.deframed_weight(d), str(d)

    @pytest.mark.unit
    def test_s_after_phi(self, system):
        """Test that deleting a chord from a projected diagram gives zero weight."""
        for d in enumerate_diagrams(3):
            assert system.weight_sum(phi_map(d).apply(s_map)) == ZERO, str(d)


# ============================================================================
# Closed Form Tests
# ============================================================================


class TestClosedForms:
    """Test suite for the D_n and comb families."""

    @pytest.mark.unit
    @pytest.mark.parametrize("n", range(7))
    def test_dn_family(self, system, n):
        """Test w(D_n) against its closed form."""
        assert system.weight(dn_diagram(n)) == closed_form_Dn(n)

    @pytest.mark.unit
    def test_dn_small_values(self):
        """Test the closed form at n = 0 and n = 1."""
        assert closed_form_Dn(0) == C
        assert closed_form_Dn(1) == C**2 - EPS * Y

    @pytest.mark.unit
    @pytest.mark.parametrize("n", range(1, 5))
    def test_teeth(self, system, n):
        """Test the comb diagrams with and without the extra chord."""
        assert system.weight_jacobi(teeth(n)) == closed_form_teeth(n)
        assert system.weight_jacobi(teeth(n, True)) == closed_form_teeth(n, True)

    @pytest.mark.unit
    def test_hige_checks(self, system):
        """Test the comb recurrences as one check."""
        result = system.hige_checks(4)

        assert result.passed
        assert result.instances == 2 + 4 * 3

    @pytest.mark.unit
    def test_closed_form_bounds(self):
        """Test the domains of the closed forms."""
        with pytest.raises(ValueError):
            closed_form_Dn(-1)
        with pytest.raises(ValueError):
            closed_form_teeth(0)
        assert closed_form_teeth(2) == Y
        assert closed_form_teeth(1, True) == EPS * Y * (C - EPS)


# ============================================================================
# Report Tests
# ============================================================================


class TestReports:
    """Test suite for the report-only and local-relation checks."""

    @pytest.mark.unit
    def test_reflection_report(self, system):
        """Test that the mirror scan never asserts."""
        result = system.reflection_report(3)

        assert result.name == "reflection symmetry"
        assert not result.assertive
        assert result.notes

    @pytest.mark.unit
    def test_prop_reduction(self, system):
        """Test the Y, Geta and crossing relations with one spectator."""
        report = system.prop_reduction_checks(max_spectators=1)

        assert [check.name for check in report.checks] == ["Y", "Geta", "cross"]
        assert report.passed

    @pytest.mark.unit
    def test_empty_weight_is_one(self, system):
        """Test the weight of the empty diagram."""
        assert system.weight(parse_chord("")) == ONE
