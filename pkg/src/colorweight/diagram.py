"""
Chord diagrams on an oriented circle.

A diagram of order n is a fixed-point-free involution on the positions 0..2n-1, read in the
orientation of the circle starting from the cut. Chords are identified by their endpoint pair
``(p, q)`` with ``p < q``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from colorweight.errors import LabelCountError, NotCrossingError

logger = logging.getLogger(__name__)

Chord = tuple[int, int]


@dataclass(frozen=True, slots=True)
class ChordDiagram:
    """
    A chord diagram given by its pairing: ``pairing[p]`` is the partner of position ``p``.

    Example:
        >>> parse_chord("1 2 1 2").pairing
        (2, 3, 0, 1)
    """

    pairing: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        size = len(self.pairing)
        if size % 2:
            raise ValueError(f"a chord diagram needs an even number of points, got {size}")
        for p, q in enumerate(self.pairing):
            if not 0 <= q < size or q == p or self.pairing[q] != p:
                raise ValueError(f"pairing is not a fixed-point-free involution at position {p}")

    @property
    def order(self) -> int:
        return len(self.pairing) // 2

    @property
    def size(self) -> int:
        return len(self.pairing)

    def chords(self) -> list[Chord]:
        """Chords sorted by their first endpoint."""
        return [(p, q) for p, q in enumerate(self.pairing) if p < q]

    def labels(self) -> tuple[int, ...]:
        """Label sequence with chords numbered 1, 2, ... by first occurrence."""
        names: dict[int, int] = {}
        sequence = []
        for p, q in enumerate(self.pairing):
            key = min(p, q)
            if key not in names:
                names[key] = len(names) + 1
            sequence.append(names[key])
        return tuple(sequence)

    def chord(self, label: int) -> Chord:
        """The chord carrying ``label`` in the first-occurrence numbering."""
        for index, chord in enumerate(self.chords(), start=1):
            if index == label:
                return chord
        raise KeyError(f"diagram of order {self.order} has no chord {label}")

    def code(self) -> str:
        return " ".join(str(label) for label in self.labels())

    def __str__(self) -> str:
        return self.code() or "(empty)"


EMPTY = ChordDiagram()


def from_sequence(sequence: Sequence[Hashable]) -> ChordDiagram:
    """Build a diagram from a sequence in which every token occurs exactly twice."""
    where: dict[Hashable, list[int]] = {}
    for position, token in enumerate(sequence):
        where.setdefault(token, []).append(position)
    pairing = [0] * len(sequence)
    for token, positions in where.items():
        if len(positions) != 2:
            raise LabelCountError(str(token), len(positions))
        p, q = positions
        pairing[p], pairing[q] = q, p
    return ChordDiagram(tuple(pairing))


def parse_chord(code: str | Sequence[str]) -> ChordDiagram:
    """
    Parse the chord text format.

    Labels are separated by whitespace; a string without whitespace is read one character per
    label (``"1212"``). The empty string is the order-0 diagram.

    Raises:
        LabelCountError: if a label does not occur exactly twice.
    """
    if isinstance(code, str):
        stripped = code.strip()
        tokens: Sequence[str] = stripped.split() if any(ch.isspace() for ch in stripped) else list(stripped)
    else:
        tokens = [str(token) for token in code]
    return from_sequence(tokens)


# ============================================================================
# Canonical forms and symmetries
# ============================================================================


def rotate(d: ChordDiagram, k: int) -> ChordDiagram:
    """Move the cut forward by ``k`` positions (position k becomes position 0)."""
    size = d.size
    if size == 0:
        return d
    k %= size
    return ChordDiagram(tuple((d.pairing[(p + k) % size] - k) % size for p in range(size)))


def reflect(d: ChordDiagram) -> ChordDiagram:
    """Reverse the orientation of the circle."""
    size = d.size
    return ChordDiagram(tuple(size - 1 - d.pairing[size - 1 - p] for p in range(size)))


@lru_cache(maxsize=1 << 16)
def _canonical_pairing(pairing: tuple[int, ...]) -> tuple[int, ...]:
    d = ChordDiagram(pairing)
    best: tuple[int, ...] | None = None
    best_diagram = d
    for k in range(d.size):
        candidate = rotate(d, k)
        labels = candidate.labels()
        if best is None or labels < best:
            best, best_diagram = labels, candidate
    return best_diagram.pairing


def canonical_form(d: ChordDiagram) -> ChordDiagram:
    """Representative of the rotation class with the lexicographically smallest label sequence."""
    if d.size == 0:
        return d
    return ChordDiagram(_canonical_pairing(d.pairing))


def dihedral_form(d: ChordDiagram) -> ChordDiagram:
    """Smaller of the canonical forms of ``d`` and its mirror image."""
    ours, mirror = canonical_form(d), canonical_form(reflect(d))
    return min(ours, mirror, key=lambda item: item.labels())


def enumerate_diagrams(n: int) -> list[ChordDiagram]:
    """Canonical representatives of all rotation classes of order ``n``, sorted by label sequence."""
    if n < 0:
        raise ValueError("order must be non-negative")
    seen: set[tuple[int, ...]] = set()

    def pairings(free: list[int], current: list[int]) -> Iterator[list[int]]:
        if not free:
            yield current
            return
        first, rest = free[0], free[1:]
        for index, partner in enumerate(rest):
            current[first], current[partner] = partner, first
            yield from pairings(rest[:index] + rest[index + 1 :], current)

    for pairing in pairings(list(range(2 * n)), [0] * (2 * n)):
        seen.add(_canonical_pairing(tuple(pairing)) if n else ())
    diagrams = [ChordDiagram(p) for p in seen]
    return sorted(diagrams, key=lambda d: d.labels())


# ============================================================================
# Chord geometry
# ============================================================================


def _inside(chord: Chord, position: int) -> bool:
    return chord[0] < position < chord[1]


def crosses(first: Chord, second: Chord) -> bool:
    return _inside(first, second[0]) != _inside(first, second[1])


def crossing_chords(d: ChordDiagram, a: Chord) -> list[Chord]:
    """Chords interleaving with ``a``, ordered by their endpoint on the left arc of ``a``."""
    if d.pairing[a[0]] != a[1]:
        raise KeyError(f"{a} is not a chord of {d}")
    found = [chord for chord in d.chords() if chord != a and crosses(a, chord)]
    return sorted(found, key=lambda chord: chord[0] if _inside(a, chord[0]) else chord[1])


def isolated_chords(d: ChordDiagram) -> list[Chord]:
    return [chord for chord in d.chords() if not crossing_chords(d, chord)]


def is_indecomposable(d: ChordDiagram) -> bool:
    """False iff some proper circular interval of positions is closed under the pairing."""
    size = d.size
    for start in range(size):
        for length in range(1, size - 1):
            interval = {(start + offset) % size for offset in range(length)}
            if all(d.pairing[p] in interval for p in interval):
                return False
    return True


def remove_chords(d: ChordDiagram, chords: Iterable[Chord]) -> ChordDiagram:
    """Delete the given chords and re-densify the remaining positions."""
    dropped = {p for chord in chords for p in chord}
    for chord in chords:
        if d.pairing[chord[0]] != chord[1]:
            raise KeyError(f"{chord} is not a chord of {d}")
    sequence = [min(p, d.pairing[p]) for p in range(d.size) if p not in dropped]
    return from_sequence(sequence)


def connected_sum(d1: ChordDiagram, d2: ChordDiagram) -> ChordDiagram:
    """Splice ``d2`` into ``d1`` at the cut."""
    shift = d1.size
    return ChordDiagram(d1.pairing + tuple(q + shift for q in d2.pairing))


# ============================================================================
# Surgery for the recurrence
# ============================================================================


class DerivedDiagrams(NamedTuple):
    par: ChordDiagram
    cross: ChordDiagram
    lr: ChordDiagram
    rl: ChordDiagram
    ll: ChordDiagram
    rr: ChordDiagram


def _sides(a: Chord, b: Chord) -> tuple[int, int]:
    """(left endpoint, right endpoint) of ``b`` with respect to ``a``."""
    return (b[0], b[1]) if _inside(a, b[0]) else (b[1], b[0])


def derived_diagrams(
    d: ChordDiagram, a: Chord, bi: Chord, bj: Chord, swap_sides: bool = False
) -> DerivedDiagrams:
    """
    The six diagrams of the recurrence for a pair of chords crossing the pivot ``a``.

    "Left" is the arc strictly between the two endpoints of ``a``. The chords ``a``, ``bi``
    and ``bj`` are removed; the four endpoint slots of ``bi`` and ``bj`` are reconnected as
    prescribed and unused slots deleted. ``swap_sides`` exchanges the roles of the two arcs.

    Raises:
        NotCrossingError: if ``bi`` or ``bj`` does not cross ``a`` or they coincide.
    """
    if bi == bj:
        raise NotCrossingError(f"the two crossing chords must differ, got {bi} twice")
    for b in (bi, bj):
        if d.pairing[b[0]] != b[1] or not crosses(a, b):
            raise NotCrossingError(f"chord {b} does not cross the pivot {a}")
    left_i, right_i = _sides(a, bi)
    left_j, right_j = _sides(a, bj)
    if swap_sides:
        left_i, right_i, left_j, right_j = right_i, left_i, right_j, left_j
    removed = set(a) | set(bi) | set(bj)

    def build(*new_chords: tuple[int, int]) -> ChordDiagram:
        token: dict[int, Hashable] = {}
        for index, (p, q) in enumerate(new_chords):
            token[p] = token[q] = ("new", index)
        sequence: list[Hashable] = []
        for position in range(d.size):
            if position in token:
                sequence.append(token[position])
            elif position not in removed:
                sequence.append(min(position, d.pairing[position]))
        return from_sequence(sequence)

    return DerivedDiagrams(
        par=build((left_i, left_j), (right_i, right_j)),
        cross=build((left_i, right_j), (right_i, left_j)),
        lr=build((left_i, right_j)),
        rl=build((right_i, left_j)),
        ll=build((left_i, left_j)),
        rr=build((right_i, right_j)),
    )


# ============================================================================
# Four-term relation
# ============================================================================

FOUR_TERM_SIGNS = (1, -1, -1, 1)


class FourTermQuadruple(NamedTuple):
    diagrams: tuple[ChordDiagram, ChordDiagram, ChordDiagram, ChordDiagram]
    signs: tuple[int, int, int, int] = FOUR_TERM_SIGNS


def four_term_quadruples(n: int) -> list[FourTermQuadruple]:
    """
    All 4T instances among order-``n`` diagrams.

    For every canonical diagram, fixed chord ``a = (p, q)``, other chord ``b`` and endpoint
    ``x`` of ``b``, the endpoint is moved to just before p, just after p, just after q and just
    before q, with signs (+, -, -, +).
    """
    if n < 2:
        raise ValueError("4T relations need at least two chords")
    quadruples = []
    for d in enumerate_diagrams(n):
        sequence = list(d.labels())
        for a in d.chords():
            label_a = sequence[a[0]]
            for b in d.chords():
                if b == a:
                    continue
                for x in b:
                    token = sequence[x]
                    moved = sequence[:x] + sequence[x + 1 :]
                    p, q = (index for index, label in enumerate(moved) if label == label_a)
                    placed = tuple(
                        from_sequence(moved[:at] + [token] + moved[at:])
                        for at in (p, p + 1, q + 1, q)
                    )
                    quadruples.append(FourTermQuadruple(placed))
    logger.debug(f"generated {len(quadruples)} four-term quadruples of order {n}")
    return quadruples


# ============================================================================
# Formal linear combinations
# ============================================================================


def signed(coeff: Fraction) -> str:
    return f"+{coeff}" if coeff >= 0 else str(coeff)


class DiagramSum:
    """
    Formal rational combination of canonical chord diagrams.

    Example:
        >>> s = DiagramSum.of(parse_chord("1 2 1 2")) * 2
        >>> s.coefficient(parse_chord("2 1 2 1"))
        Fraction(2, 1)
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[ChordDiagram, Fraction] | None = None):
        clean: dict[ChordDiagram, Fraction] = {}
        for d, coeff in (terms or {}).items():
            key = canonical_form(d)
            clean[key] = clean.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {d: coeff for d, coeff in clean.items() if coeff != 0}

    @classmethod
    def of(cls, d: ChordDiagram, coeff: Fraction | int = 1) -> DiagramSum:
        return cls({d: Fraction(coeff)})

    @property
    def terms(self) -> dict[ChordDiagram, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[ChordDiagram, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: item[0].labels())

    def coefficient(self, d: ChordDiagram) -> Fraction:
        return self._terms.get(canonical_form(d), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: DiagramSum) -> DiagramSum:
        merged = dict(self._terms)
        for d, coeff in other._terms.items():
            merged[d] = merged.get(d, Fraction(0)) + coeff
        return DiagramSum(merged)

    def __neg__(self) -> DiagramSum:
        return DiagramSum({d: -coeff for d, coeff in self._terms.items()})

    def __sub__(self, other: DiagramSum) -> DiagramSum:
        return self + (-other)

    def __mul__(self, scale: Fraction | int) -> DiagramSum:
        return DiagramSum({d: coeff * scale for d, coeff in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DiagramSum) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def apply(self, func: Callable[[ChordDiagram], DiagramSum]) -> DiagramSum:
        """Linear extension of a map from diagrams to sums."""
        total = DiagramSum()
        for d, coeff in self._terms.items():
            total = total + func(d) * coeff
        return total

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(f"{signed(coeff)} [{d}]" for d, coeff in self.items())

    def __repr__(self) -> str:
        return f"DiagramSum({self.render()})"


def dn_diagram(n: int) -> ChordDiagram:
    """The family ``1 2 ... n+1 1 n+1 n ... 2``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    labels = list(range(1, n + 2)) + [1] + list(range(n + 1, 1, -1))
    return from_sequence(labels)
