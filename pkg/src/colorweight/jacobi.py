"""
Jacobi diagrams and their STU resolution into chord diagrams.

Endpoints are tuples: ``("c", i)`` for the circle position ``i`` (counterclockwise) and
``("v", name, slot)`` for a slot of an internal vertex, slots listed counterclockwise.
"""

from __future__ import annotations

import itertools
import json
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

from colorweight.diagram import ChordDiagram, DiagramSum, from_sequence
from colorweight.errors import DisconnectedInternalError, JacobiValidationError
from colorweight.schemas import CircleEndpoint, JacobiSpec, JacobiVertex, VertexEndpoint

logger = logging.getLogger(__name__)

End = tuple  # ("c", position) or ("v", vertex, slot)


def circle(position: int) -> End:
    return ("c", position)


def slot(vertex: str, index: int) -> End:
    return ("v", vertex, index)


def describe(end: End) -> str:
    if end[0] == "c":
        return f"circle {end[1]}"
    return f"vertex {end[1]} slot {end[2]}"


@dataclass(frozen=True)
class JacobiDiagram:
    """
    A uni-trivalent graph attached to an oriented circle.

    Args:
        legs: number of univalent vertices on the circle, at positions 0..legs-1.
        vertices: names of the internal trivalent vertices.
        edges: unordered pairs of endpoints; every circle position and every vertex slot must be
            used by exactly one edge.

    Raises:
        JacobiValidationError: naming the first offending endpoint.
    """

    legs: int
    vertices: tuple[str, ...] = ()
    edges: tuple[tuple[End, End], ...] = ()
    adjacency: Mapping[End, End] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.legs < 0:
            raise JacobiValidationError(f"negative leg count {self.legs}")
        if len(set(self.vertices)) != len(self.vertices):
            raise JacobiValidationError("duplicate vertex ids")
        known = set(self.vertices)
        adjacency: dict[End, End] = {}
        for first, second in self.edges:
            for end in (first, second):
                self._check_end(end, known)
                if end in adjacency:
                    raise JacobiValidationError("endpoint used by two edges", describe(end))
            if first == second:
                raise JacobiValidationError("edge joins an endpoint to itself", describe(first))
            adjacency[first] = second
            adjacency[second] = first
        expected = [circle(i) for i in range(self.legs)] + [
            slot(v, k) for v in self.vertices for k in range(3)
        ]
        for end in expected:
            if end not in adjacency:
                raise JacobiValidationError("endpoint not attached to any edge", describe(end))
        if (self.legs + len(self.vertices)) % 2:
            raise JacobiValidationError(
                f"{self.legs} legs and {len(self.vertices)} internal vertices give an odd vertex count"
            )
        object.__setattr__(self, "adjacency", adjacency)

    def _check_end(self, end: End, known: set[str]) -> None:
        if end[0] == "c" and len(end) == 2:
            if not 0 <= end[1] < self.legs:
                raise JacobiValidationError("circle position out of range", describe(end))
        elif end[0] == "v" and len(end) == 3:
            if end[1] not in known:
                raise JacobiValidationError("unknown vertex", describe(end))
            if end[2] not in (0, 1, 2):
                raise JacobiValidationError("slot must be 0, 1 or 2", describe(end))
        else:
            raise JacobiValidationError(f"malformed endpoint {end!r}")

    @property
    def order(self) -> int:
        return (self.legs + len(self.vertices)) // 2

    # ------------------------------------------------------------------ conversions

    @classmethod
    def from_chord(cls, d: ChordDiagram) -> JacobiDiagram:
        return cls(legs=d.size, edges=tuple((circle(p), circle(q)) for p, q in d.chords()))

    @classmethod
    def from_spec(cls, spec: JacobiSpec) -> JacobiDiagram:
        def convert(end: CircleEndpoint | VertexEndpoint) -> End:
            if isinstance(end, CircleEndpoint):
                return circle(end.circle)
            return slot(end.vertex, end.slot)

        return cls(
            legs=spec.legs,
            vertices=tuple(vertex.id for vertex in spec.vertices),
            edges=tuple((convert(a), convert(b)) for a, b in spec.edges),
        )

    @classmethod
    def from_json(cls, data: str | Mapping[str, Any]) -> JacobiDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_spec(JacobiSpec.model_validate(data))

    def to_spec(self) -> JacobiSpec:
        def convert(end: End) -> CircleEndpoint | VertexEndpoint:
            if end[0] == "c":
                return CircleEndpoint(circle=end[1])
            return VertexEndpoint(vertex=end[1], slot=end[2])

        return JacobiSpec(
            legs=self.legs,
            vertices=[JacobiVertex(id=v) for v in self.vertices],
            edges=[(convert(a), convert(b)) for a, b in self.edges],
        )

    def to_json(self) -> dict[str, Any]:
        return self.to_spec().model_dump()


# ============================================================================
# Vertex orientation
# ============================================================================


def vertex_flip(j: JacobiDiagram, v: str) -> JacobiDiagram:
    """Transpose slots 1 and 2 of the internal vertex ``v``, reversing its orientation."""
    if v not in j.vertices:
        raise JacobiValidationError("unknown vertex", f"vertex {v}")
    swap = {slot(v, 1): slot(v, 2), slot(v, 2): slot(v, 1)}
    edges = tuple((swap.get(a, a), swap.get(b, b)) for a, b in j.edges)
    return JacobiDiagram(legs=j.legs, vertices=j.vertices, edges=edges)


# ============================================================================
# STU resolution
# ============================================================================


def _check_connected(j: JacobiDiagram) -> None:
    reached: set[str] = set()
    frontier = [
        j.adjacency[circle(i)][1] for i in range(j.legs) if j.adjacency[circle(i)][0] == "v"
    ]
    while frontier:
        v = frontier.pop()
        if v in reached:
            continue
        reached.add(v)
        for k in range(3):
            other = j.adjacency[slot(v, k)]
            if other[0] == "v" and other[1] not in reached:
                frontier.append(other[1])
    stranded = sorted(set(j.vertices) - reached)
    if stranded:
        raise DisconnectedInternalError(
            f"internal vertices {stranded} are not connected to the circle"
        )


def _connect(adjacency: dict[End, End], first: End, second: End) -> None:
    adjacency[first] = second
    adjacency[second] = first


def stu_resolve(
    j: JacobiDiagram, strategy: Literal["first", "last"] = "first"
) -> DiagramSum:
    """
    Rewrite ``j`` as a signed combination of chord diagrams with the STU relation.

    At each step the internal vertex attached to the circle at the smallest (``first``) or
    largest (``last``) position is removed. With ``k`` the slot on the circle at point ``p``,
    ``p`` splits into ``p1 < p2``; the S term joins slot ``k+2`` to ``p1`` and slot ``k+1`` to
    ``p2``, the U term the other way round, and the result is S - U.

    Raises:
        DisconnectedInternalError: if some internal component has no leg on the circle.
    """
    _check_connected(j)
    fresh = itertools.count(j.legs)
    start = (list(range(j.legs)), dict(j.adjacency), frozenset(j.vertices), 1)
    stack = [start]
    result: dict[ChordDiagram, Fraction] = {}
    steps = 0
    while stack:
        points, adjacency, remaining, sign = stack.pop()
        if not remaining:
            sequence = [frozenset((p, adjacency[circle(p)][1])) for p in points]
            d = from_sequence(sequence)
            result[d] = result.get(d, Fraction(0)) + sign
            continue
        attached = [
            index for index, p in enumerate(points) if adjacency[circle(p)][0] == "v"
        ]
        index = min(attached) if strategy == "first" else max(attached)
        p = points[index]
        _, v, k = adjacency[circle(p)]
        next1 = adjacency[slot(v, (k + 1) % 3)]
        next2 = adjacency[slot(v, (k + 2) % 3)]
        steps += 1
        if next1[0] == "v" and next1[1] == v:
            continue
        base = {
            end: other
            for end, other in adjacency.items()
            if end != circle(p) and not (end[0] == "v" and end[1] == v)
        }
        p1, p2 = next(fresh), next(fresh)
        split = points[:index] + [p1, p2] + points[index + 1 :]
        for first_target, second_target, term_sign in (
            (circle(p1), circle(p2), sign),
            (circle(p2), circle(p1), -sign),
        ):
            branch = dict(base)
            _connect(branch, next2, first_target)
            _connect(branch, next1, second_target)
            stack.append((split, branch, remaining - {v}, term_sign))
    logger.debug(f"STU resolution of an order-{j.order} diagram took {steps} steps")
    return DiagramSum(result)


# ============================================================================
# Diagram builders
# ============================================================================


def _build(legs: int, vertices: Iterable[str], edges: Iterable[tuple[End, End]]) -> JacobiDiagram:
    return JacobiDiagram(legs=legs, vertices=tuple(vertices), edges=tuple(edges))


def tripod() -> JacobiDiagram:
    """One internal vertex with three legs in counterclockwise order."""
    return _build(3, ["v"], [(circle(k), slot("v", k)) for k in range(3)])


def h_diagram() -> JacobiDiagram:
    """Two joined internal vertices, each carrying two adjacent legs."""
    return _build(
        4,
        ["t", "b"],
        [
            (slot("t", 0), circle(0)),
            (slot("t", 1), circle(1)),
            (slot("t", 2), slot("b", 0)),
            (slot("b", 1), circle(2)),
            (slot("b", 2), circle(3)),
        ],
    )


def wheel(n: int) -> JacobiDiagram:
    """
    The wheel with ``n`` spokes; ``wheel(2)`` is the theta diagram.

    Vertex ``w{i}`` has its spoke at circle position ``i`` (slot 0), the next vertex at slot 1
    and the previous vertex at slot 2.
    """
    if n < 2:
        raise ValueError("a wheel needs at least two spokes")
    names = [f"w{i}" for i in range(n)]
    edges = [(circle(i), slot(names[i], 0)) for i in range(n)]
    edges += [(slot(names[i], 1), slot(names[(i + 1) % n], 2)) for i in range(n)]
    return _build(n, names, edges)


def teeth(n: int, with_extra_chord: bool = False) -> JacobiDiagram:
    """
    A comb of ``n`` internal vertices between two end legs, one tooth per vertex.

    Vertex ``v{i}`` lists its right neighbour (the previous vertex or the first end leg), its
    tooth and its left neighbour (the next vertex or the last end leg). With
    ``with_extra_chord`` a chord separates the first end leg from all other legs.
    """
    if n < 1:
        raise ValueError("the comb needs at least one tooth")
    offset = 1 if with_extra_chord else 0
    first_end = 0
    last_end = n + 1 + offset
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = [(slot(names[0], 0), circle(first_end))]
    for i, name in enumerate(names, start=1):
        edges.append((slot(name, 1), circle(i + offset)))
        if i < n:
            edges.append((slot(name, 2), slot(names[i], 0)))
    edges.append((slot(names[-1], 2), circle(last_end)))
    legs = n + 2
    if with_extra_chord:
        edges.append((circle(1), circle(n + 3)))
        legs += 2
    return _build(legs, names, edges)


def intermediate_diagram() -> JacobiDiagram:
    """An H-diagram with one chord running between its two pairs of legs."""
    return _build(
        6,
        ["v1", "v2"],
        [
            (circle(0), circle(3)),
            (slot("v2", 0), circle(1)),
            (slot("v2", 1), slot("v1", 0)),
            (slot("v2", 2), circle(5)),
            (slot("v1", 1), circle(2)),
            (slot("v1", 2), circle(4)),
        ],
    )
