"""
Unit tests for colorweight.relations module.

Tests cover:
- Spectator contexts
- Building the Jacobi diagrams of template terms
- Checking relations with the recurrence evaluator
"""

import pytest

from colorweight.jacobi import circle, slot
from colorweight.poly import ONE
from colorweight.relations import (
    GETA_RELATION,
    PROP_RELATIONS,
    TEN_RELATIONS,
    Y_RELATION,
    build_term,
    check_relation,
    contexts,
    evaluate_side,
    lift,
)

# ============================================================================
# Context Tests
# ============================================================================


class TestContexts:
    """Test suite for placing spectator chords into gaps."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        ("gaps", "spectators", "count"),
        [(2, 0, 1), (1, 1, 2), (2, 1, 4), (4, 2, 116)],
    )
    def test_counts(self, gaps, spectators, count):
        """Test the number of contexts."""
        assert len(contexts(gaps, spectators)) == count

    @pytest.mark.unit
    def test_empty_context(self):
        """Test that the first context has no spectators."""
        assert contexts(2, 1)[0] == ((), ())

    @pytest.mark.unit
    def test_one_chord_in_two_gaps(self):
        """Test the placements of a single spectator chord."""
        assert set(contexts(2, 1)[1:]) == {((), (0, 0)), ((0,), (0,)), ((0, 0), ())}

    @pytest.mark.unit
    def test_no_gaps(self):
        """Test that templates need a gap."""
        with pytest.raises(ValueError):
            contexts(0, 1)


# ============================================================================
# Build Tests
# ============================================================================


class TestBuildTerm:
    """Test suite for instantiating template terms."""

    @pytest.mark.unit
    def test_unused_points_are_dropped(self):
        """Test that a term only places the points it uses."""
        term = Y_RELATION.rhs[0]
        j = build_term(Y_RELATION, term, ((), ()))

        assert j.legs == 2
        assert j.edges == ((circle(0), circle(1)),)

    @pytest.mark.unit
    def test_spectators_follow_their_segment(self):
        """Test the circle positions of spectator endpoints."""
        term = Y_RELATION.lhs[0]
        j = build_term(Y_RELATION, term, ((0,), (0,)))

        assert j.legs == 5
        assert (circle(1), circle(4)) in j.edges

    @pytest.mark.unit
    def test_internal_edge_added_once(self):
        """Test that an edge between two vertices appears a single time."""
        j = build_term(GETA_RELATION, GETA_RELATION.lhs[0], ((), (), (), ()))
        internal = [e for e in j.edges if e[0][0] == "v" and e[1][0] == "v"]

        assert internal == [(slot("v1", 0), slot("v2", 1))]
        assert j.order == 3

    @pytest.mark.unit
    def test_points(self):
        """Test the point names used by a vertex term."""
        assert GETA_RELATION.lhs[0].points() == {"A", "B", "C", "D"}


# ============================================================================
# Relation Check Tests
# ============================================================================


class TestCheckRelation:
    """Test suite for comparing both sides of a relation."""

    @pytest.mark.unit
    def test_y_relation_without_spectators(self, system):
        """Test the Y relation on the bare template."""
        evaluator = lift(system.weight)
        lhs = evaluate_side(Y_RELATION, Y_RELATION.lhs, ((), ()), evaluator)
        rhs = evaluate_side(Y_RELATION, Y_RELATION.rhs, ((), ()), evaluator)
        assert lhs == rhs

    @pytest.mark.unit
    @pytest.mark.parametrize("template", PROP_RELATIONS, ids=lambda t: t.name)
    def test_prop_relations(self, system, template):
        """Test the three vertex relations with up to two spectators."""
        result = check_relation(template, lift(system.weight), max_spectators=2)

        assert result.passed, result.failure
        assert result.instances == len(contexts(template.gaps, 2))

    @pytest.mark.unit
    @pytest.mark.parametrize("template", TEN_RELATIONS, ids=lambda t: t.name)
    def test_ten_relations(self, system, template):
        """Test the four-chord identities with one spectator."""
        result = check_relation(template, lift(system.weight), max_spectators=1)
        assert result.passed, result.failure

    @pytest.mark.unit
    def test_failure_is_reported(self):
        """Test that a wrong evaluator produces a failure description."""
        result = check_relation(Y_RELATION, lambda j: ONE, max_spectators=1)

        assert not result.passed
        assert result.instances == 1
        assert result.failure.startswith("spectators ((), ())")
