"""
Local relations of the A1_e weight system, checked inside spectator contexts.

A template places named points on thick segments around the circle. Each segment is followed
by a dotted gap that a context fills with spectator chord endpoints. Every term of a relation
is a Jacobi diagram on a subset of the named points; points a term does not use are left out
of that term's diagram.
"""

import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from colorweight.diagram import ChordDiagram
from colorweight.jacobi import End, JacobiDiagram, circle, slot, stu_resolve
from colorweight.poly import EPS, ONE, C, CenterPoly, RationalAccumulator, Y
from colorweight.schemas import CheckResult

logger = logging.getLogger(__name__)

Context = tuple[tuple[int, ...], ...]
JacobiEvaluator = Callable[[JacobiDiagram], CenterPoly]

# ============================================================================
# Templates
# ============================================================================


@dataclass(frozen=True)
class TemplateTerm:
    """
    One diagram of a relation with its coefficient.

    ``vertices`` maps an internal vertex to the targets of its three slots, counterclockwise;
    a target is a point name or the name of another vertex.
    """

    coeff: CenterPoly
    chords: tuple[tuple[str, str], ...] = ()
    vertices: tuple[tuple[str, tuple[str, str, str]], ...] = ()

    def points(self) -> set[str]:
        used = {p for chord in self.chords for p in chord}
        names = {v for v, _ in self.vertices}
        used |= {t for _, targets in self.vertices for t in targets if t not in names}
        return used


@dataclass(frozen=True)
class RelationTemplate:
    name: str
    segments: tuple[tuple[str, ...], ...]
    lhs: tuple[TemplateTerm, ...]
    rhs: tuple[TemplateTerm, ...]

    @property
    def gaps(self) -> int:
        return len(self.segments)


def _chords(coeff: CenterPoly, *pairs: str) -> TemplateTerm:
    return TemplateTerm(coeff, tuple(tuple(p.split("~")) for p in pairs))


E_CY = EPS * (C - Y)


Y_RELATION = RelationTemplate(
    name="Y",
    segments=(("A",), ("B", "C")),
    lhs=(TemplateTerm(ONE, vertices=(("v", ("A", "B", "C")),)),),
    rhs=(_chords(EPS, "A~B"), _chords(-E_CY)),
)

GETA_RELATION = RelationTemplate(
    name="Geta",
    segments=(("A",), ("B",), ("C",), ("D",)),
    lhs=(TemplateTerm(ONE, vertices=(("v2", ("A", "v1", "D")), ("v1", ("v2", "B", "C")))),),
    rhs=(
        _chords(EPS, "A~B", "C~D"),
        _chords(-EPS, "A~C", "B~D"),
        _chords(E_CY, "A~C"),
        _chords(E_CY, "B~D"),
        _chords(-E_CY, "A~B"),
        _chords(-E_CY, "C~D"),
    ),
)

CROSS_RELATION = RelationTemplate(
    name="cross",
    segments=(("A",), ("B",), ("C",), ("D",)),
    lhs=(TemplateTerm(ONE, vertices=(("p", ("A", "q", "C")), ("q", ("B", "p", "D")))),),
    rhs=(
        _chords(EPS, "A~D", "B~C"),
        _chords(-EPS, "A~B", "C~D"),
        _chords(E_CY, "C~D"),
        _chords(E_CY, "A~B"),
        _chords(-E_CY, "B~C"),
        _chords(-E_CY, "A~D"),
    ),
)


def _lambda_gamma_rhs() -> tuple[TemplateTerm, ...]:
    return (
        _chords(EPS, "B~C", "A~D"),
        _chords(-EPS, "A~C", "B~D"),
        _chords(E_CY, "A~C"),
        _chords(E_CY, "B~D"),
        _chords(-E_CY, "B~C"),
        _chords(-E_CY, "A~D"),
    )


_THICK_B = ("B-1", "B", "B+1")
_THICK_C = ("C-1", "C", "C+1")

TEN_RELATIONS = (
    RelationTemplate(
        name="ten1",
        segments=(("A",), _THICK_B, _THICK_C, ("D",)),
        lhs=(
            _chords(ONE, "A~B+1", "B-1~C+1", "C-1~D"),
            _chords(-ONE, "A~B+1", "B-1~C-1", "C+1~D"),
            _chords(-ONE, "A~B-1", "B+1~C+1", "C-1~D"),
            _chords(ONE, "A~B-1", "B+1~C-1", "C+1~D"),
        ),
        rhs=_lambda_gamma_rhs(),
    ),
    RelationTemplate(
        name="ten2",
        segments=(("A",), _THICK_B, _THICK_C, ("D",)),
        lhs=(
            _chords(ONE, "A~C-1", "B-1~C+1", "B+1~D"),
            _chords(-ONE, "A~C-1", "B+1~C+1", "B-1~D"),
            _chords(-ONE, "A~C+1", "B-1~C-1", "B+1~D"),
            _chords(ONE, "A~C+1", "B+1~C-1", "B-1~D"),
        ),
        rhs=(
            _chords(EPS, "B~C", "A~D"),
            _chords(-EPS, "A~B", "C~D"),
            _chords(E_CY, "A~B"),
            _chords(E_CY, "C~D"),
            _chords(-E_CY, "B~C"),
            _chords(-E_CY, "A~D"),
        ),
    ),
    RelationTemplate(
        name="ten3",
        segments=(("A-1", "A", "A+1"), ("B",), _THICK_C, ("D",)),
        lhs=(
            _chords(ONE, "A+1~C+1", "A-1~B", "C-1~D"),
            _chords(-ONE, "A-1~C+1", "A+1~B", "C-1~D"),
            _chords(-ONE, "A+1~C-1", "A-1~B", "C+1~D"),
            _chords(ONE, "A-1~C-1", "A+1~B", "C+1~D"),
        ),
        rhs=_lambda_gamma_rhs(),
    ),
    RelationTemplate(
        name="ten4",
        segments=(("A",), _THICK_B, ("C",), ("D-1", "D", "D+1")),
        lhs=(
            _chords(ONE, "B-1~D-1", "A~B+1", "C~D+1"),
            _chords(-ONE, "B+1~D-1", "A~B-1", "C~D+1"),
            _chords(-ONE, "B-1~D+1", "A~B+1", "C~D-1"),
            _chords(ONE, "B+1~D+1", "A~B-1", "C~D-1"),
        ),
        rhs=_lambda_gamma_rhs(),
    ),
)

PROP_RELATIONS = (Y_RELATION, GETA_RELATION, CROSS_RELATION)


# ============================================================================
# Contexts
# ============================================================================


def _matchings(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for index, partner in enumerate(rest):
        for tail in _matchings(rest[:index] + rest[index + 1 :]):
            yield [(first, partner), *tail]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        edges = (-1, *bars, total + parts - 1)
        yield tuple(edges[i + 1] - edges[i] - 1 for i in range(parts))


def contexts(gaps: int, max_spectators: int) -> list[Context]:
    """
    Every way to place up to ``max_spectators`` spectator chords into ``gaps`` dotted gaps.

    The 2k spectator endpoints are laid out in circle order, paired by a perfect matching and
    split into the gaps by a composition of 2k; each gap lists the chord id of every endpoint
    it holds.
    """
    if gaps < 1:
        raise ValueError("a template has at least one gap")
    found: list[Context] = []
    for k in range(max_spectators + 1):
        positions = list(range(2 * k))
        for matching in _matchings(positions):
            label = {}
            for chord_id, (p, q) in enumerate(matching):
                label[p] = label[q] = chord_id
            sequence = [label[p] for p in positions]
            for split in _compositions(2 * k, gaps):
                start = 0
                filled = []
                for size in split:
                    filled.append(tuple(sequence[start : start + size]))
                    start += size
                found.append(tuple(filled))
    return found


# ============================================================================
# Instantiation and checking
# ============================================================================


def build_term(template: RelationTemplate, term: TemplateTerm, context: Context) -> JacobiDiagram:
    """The Jacobi diagram of ``term`` with the spectators of ``context`` on the circle."""
    used = term.points()
    position: dict[str, int] = {}
    spectator_ends: dict[int, list[int]] = {}
    cursor = 0
    for segment, gap in zip(template.segments, context, strict=True):
        for point in segment:
            if point in used:
                position[point] = cursor
                cursor += 1
        for chord_id in gap:
            spectator_ends.setdefault(chord_id, []).append(cursor)
            cursor += 1
    edges: list[tuple[End, End]] = [(circle(p), circle(q)) for p, q in spectator_ends.values()]
    edges += [(circle(position[p]), circle(position[q])) for p, q in term.chords]
    targets = dict(term.vertices)
    for v, slots in term.vertices:
        for k, target in enumerate(slots):
            if target in targets:
                other = targets[target].index(v)
                if (target, v) < (v, target):
                    continue
                edges.append((slot(v, k), slot(target, other)))
            else:
                edges.append((slot(v, k), circle(position[target])))
    return JacobiDiagram(legs=cursor, vertices=tuple(targets), edges=tuple(edges))


def evaluate_side(
    template: RelationTemplate,
    terms: Sequence[TemplateTerm],
    context: Context,
    evaluator: JacobiEvaluator,
) -> CenterPoly:
    total = CenterPoly()
    for term in terms:
        total = total + term.coeff * evaluator(build_term(template, term, context))
    return total


def lift(chord_weight: Callable[[ChordDiagram], CenterPoly]) -> JacobiEvaluator:
    """Extend a chord-diagram evaluator to Jacobi diagrams through STU resolution."""

    def evaluate(j: JacobiDiagram) -> CenterPoly:
        accumulator = RationalAccumulator()
        for d, coeff in stu_resolve(j).items():
            accumulator.add(coeff, chord_weight(d))
        return accumulator.result()

    return evaluate


def check_relation(
    template: RelationTemplate, evaluator: JacobiEvaluator, max_spectators: int = 2
) -> CheckResult:
    """Compare both sides of ``template`` in every context with up to ``max_spectators`` chords."""
    instances = 0
    failure = None
    for context in contexts(template.gaps, max_spectators):
        instances += 1
        lhs = evaluate_side(template, template.lhs, context, evaluator)
        rhs = evaluate_side(template, template.rhs, context, evaluator)
        if lhs != rhs:
            failure = f"spectators {context}: {lhs.render()} != {rhs.render()}"
            logger.debug(f"relation {template.name} fails with {failure}")
            break
    return CheckResult(
        name=template.name, passed=failure is None, instances=instances, failure=failure
    )

