"""
The A1_e weight system on chord diagrams, Jacobi diagrams and their formal sums.

Chord diagrams are evaluated with the recurrence

    w(D) = (c - e*k) w(D_a) + e(c - y) sum_i w(D_a,i)
           + e sum_{i<j} (w(D_par) - w(D_cross))
           + e(c - y) sum_{i<j} (w(D_lr) + w(D_rl) - w(D_ll) - w(D_rr))

where a is the pivot chord and b_1..b_k are the chords crossing it.
"""

import logging
import math
from fractions import Fraction
from typing import Literal

from colorweight.cache import WeightCache
from colorweight.diagram import (
    Chord,
    ChordDiagram,
    DiagramSum,
    canonical_form,
    connected_sum,
    crossing_chords,
    derived_diagrams,
    enumerate_diagrams,
    parse_chord,
    reflect,
    remove_chords,
)
from colorweight.jacobi import JacobiDiagram, stu_resolve, teeth
from colorweight.poly import EPS, ONE, C, CenterPoly, RationalAccumulator, Y
from colorweight.relations import PROP_RELATIONS, check_relation, lift
from colorweight.schemas import CheckResult, VerificationReport

logger = logging.getLogger(__name__)

SINGLE_CHORD = parse_chord("1 1")


def select_pivot(d: ChordDiagram) -> Chord:
    """The chord crossed by the fewest others; ties go to the smallest first endpoint."""
    return min(d.chords(), key=lambda chord: (len(crossing_chords(d, chord)), chord[0]))


class WeightSystem:
    """
    Evaluates weights with a shared cache keyed by canonical diagrams.

    Args:
        cache: the memo table; a fresh one sized from the environment when omitted.
        deframed_cache: memo of the c = 0 recurrence; defaults to a cache with the same cap.
    """

    def __init__(
        self, cache: WeightCache | None = None, deframed_cache: WeightCache | None = None
    ):
        self.cache = cache if cache is not None else WeightCache.from_env()
        self.deframed_cache = (
            deframed_cache if deframed_cache is not None else WeightCache(self.cache.max_bytes)
        )
        self.logger = logging.getLogger(__name__)

    # ------------------------------------------------------------------ framed weights

    def weight(self, d: ChordDiagram) -> CenterPoly:
        key = canonical_form(d)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        value = self._expand(key, select_pivot(key)) if key.order else ONE
        self.cache.put(key, value)
        return value

    def _expand(self, d: ChordDiagram, a: Chord) -> CenterPoly:
        crossing = crossing_chords(d, a)
        k = len(crossing)
        value = (C - EPS * k) * self.weight(remove_chords(d, [a]))
        if not crossing:
            return value
        singles = CenterPoly()
        for b in crossing:
            singles = singles + self.weight(remove_chords(d, [a, b]))
        pairs = CenterPoly()
        corners = CenterPoly()
        for i, bi in enumerate(crossing):
            for bj in crossing[i + 1 :]:
                derived = derived_diagrams(d, a, bi, bj)
                w = {name: self.weight(x) for name, x in derived._asdict().items()}
                pairs = pairs + w["par"] - w["cross"]
                corners = corners + w["lr"] + w["rl"] - w["ll"] - w["rr"]
        return value + EPS * (C - Y) * (singles + corners) + EPS * pairs

    def weight_recurrence(self, d: ChordDiagram, pivot: Chord | None = None) -> CenterPoly:
        """
        Weight of ``d``; an explicit ``pivot`` is used for the first expansion step only.

        Raises:
            ValueError: if ``pivot`` is not a chord of ``d``.
        """
        if pivot is None:
            return self.weight(d)
        if pivot not in d.chords():
            raise ValueError(f"{pivot} is not a chord of {d}")
        return self._expand(d, pivot)

    def weight_jacobi(
        self, j: JacobiDiagram, strategy: Literal["first", "last"] = "first"
    ) -> CenterPoly:
        return self.weight_sum(stu_resolve(j, strategy))

    def weight_sum(self, s: DiagramSum) -> CenterPoly:
        """
        Linear extension of the weight.

        Raises:
            NonIntegralResultError: if a rational coefficient survives in the total.
        """
        accumulator = RationalAccumulator()
        for d, coeff in s.items():
            accumulator.add(coeff, self.weight(d))
        return accumulator.result()

    # ------------------------------------------------------------------ deframing

    def deframed_weight(self, d: ChordDiagram) -> CenterPoly:
        return self.weight(d).substitute_c_zero()

    def deframed_recurrence(self, d: ChordDiagram) -> CenterPoly:
        """
        The recurrence with c set to zero, evaluated independently of the framed weight:

            wbar(D) = -e (k wbar(D_a) + y sum_i wbar(D_a,i) - sum_{i<j} wbar(Lambda)
                          + y sum_{i<j} wbar(Gamma))

        with Lambda = D_par - D_cross and Gamma = D_lr + D_rl - D_ll - D_rr.
        """
        key = canonical_form(d)
        cached = self.deframed_cache.get(key)
        if cached is not None:
            return cached
        if not key.order:
            value = ONE
        else:
            a = select_pivot(key)
            crossing = crossing_chords(key, a)
            inner = self.deframed_recurrence(remove_chords(key, [a])) * len(crossing)
            for b in crossing:
                inner = inner + Y * self.deframed_recurrence(remove_chords(key, [a, b]))
            for i, bi in enumerate(crossing):
                for bj in crossing[i + 1 :]:
                    derived = derived_diagrams(key, a, bi, bj)
                    w = {name: self.deframed_recurrence(x) for name, x in derived._asdict().items()}
                    inner = inner - (w["par"] - w["cross"])
                    inner = inner + Y * (w["lr"] + w["rl"] - w["ll"] - w["rr"])
            value = -EPS * inner
        self.deframed_cache.put(key, value)
        return value

    # ------------------------------------------------------------------ checks

    def hige_checks(self, max_n: int = 6) -> CheckResult:
        """Teeth-family recurrences and closed forms on STU-evaluated comb diagrams."""
        plain = {n: self.weight_jacobi(teeth(n)) for n in range(1, max_n + 1)}
        extra = {n: self.weight_jacobi(teeth(n, True)) for n in range(1, max_n + 1)}
        instances = 0
        failure = None
        for n in range(1, max_n + 1):
            expected = [
                (f"w(D_{n}) closed form", plain[n], closed_form_teeth(n, False)),
                (f"w(D'_{n}) closed form", extra[n], closed_form_teeth(n, True)),
            ]
            if n > 1:
                expected.append(
                    (f"w(D_{n}) recurrence", plain[n], C * plain[n - 1] - extra[n - 1])
                )
                expected.append(
                    (
                        f"w(D'_{n}) recurrence",
                        extra[n],
                        (EPS - C) * extra[n - 1] - C * (EPS - C) * plain[n - 1],
                    )
                )
            for label, got, want in expected:
                instances += 1
                if failure is None and got != want:
                    failure = f"{label}: {got.render()} != {want.render()}"
        return CheckResult(
            name="teeth recurrences", passed=failure is None, instances=instances, failure=failure
        )

    def reflection_report(self, max_order: int = 4) -> CheckResult:
        """Report (never assert) diagrams whose mirror image has a different weight."""
        notes = []
        instances = 0
        for n in range(1, max_order + 1):
            for d in enumerate_diagrams(n):
                mirror = canonical_form(reflect(d))
                if mirror.labels() < d.labels():
                    continue
                instances += 1
                w, w_mirror = self.weight(d), self.weight(mirror)
                if w != w_mirror:
                    self.logger.warning(
                        f"mirror pair {d} / {mirror} has weights {w.render()} / {w_mirror.render()}"
                    )
                    notes.append(f"{d} / {mirror}: {w.render()} vs {w_mirror.render()}")
        return CheckResult(
            name="reflection symmetry",
            passed=not notes,
            instances=instances,
            assertive=False,
            notes=notes or ["all mirror pairs agree"],
        )

    def prop_reduction_checks(self, max_spectators: int = 2) -> VerificationReport:
        evaluator = lift(self.weight)
        return VerificationReport(
            suite="props",
            checks=[
                check_relation(template, evaluator, max_spectators) for template in PROP_RELATIONS
            ],
        )


# ============================================================================
# Deframing operators
# ============================================================================


def s_map(d: ChordDiagram) -> DiagramSum:
    """Sum of the diagrams obtained by deleting one chord."""
    total = DiagramSum()
    for a in d.chords():
        total = total + DiagramSum.of(remove_chords(d, [a]))
    return total


def theta_map(d: ChordDiagram) -> ChordDiagram:
    """Connected sum with the single-chord diagram."""
    return connected_sum(d, SINGLE_CHORD)


def phi_map(d: ChordDiagram) -> DiagramSum:
    """
    The deframing projection sum_{k=0}^{n} (-1)^k / k! theta^k s^k.

    The k = 0 term is the identity.
    """
    total = DiagramSum()
    deleted = DiagramSum.of(d)
    for k in range(d.order + 1):
        if k:
            deleted = deleted.apply(s_map)
        lifted = deleted
        for _ in range(k):
            lifted = lifted.apply(lambda x: DiagramSum.of(theta_map(x)))
        total = total + lifted * Fraction((-1) ** k, math.factorial(k))
    return total


# ============================================================================
# Closed forms
# ============================================================================


def closed_form_Dn(n: int) -> CenterPoly:
    """w(D_n) = c^(n+1) - (c^n - (c - e)^n) y for the family ``1 2 ... n+1 1 n+1 ... 2``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return C ** (n + 1) - (C**n - (C - EPS) ** n) * Y


def closed_form_teeth(n: int, with_extra_chord: bool = False) -> CenterPoly:
    if n < 1:
        raise ValueError("the comb needs at least one tooth")
    value = EPS**n * Y
    return value * (C - EPS) if with_extra_chord else value


# ============================================================================
# Module-level interface
# ============================================================================

_default: WeightSystem | None = None


def default_system() -> WeightSystem:
    global _default
    if _default is None:
        _default = WeightSystem()
    return _default


def weight_recurrence(d: ChordDiagram, pivot: Chord | None = None) -> CenterPoly:
    return default_system().weight_recurrence(d, pivot)


def weight_jacobi(j: JacobiDiagram, strategy: Literal["first", "last"] = "first") -> CenterPoly:
    return default_system().weight_jacobi(j, strategy)


def weight_sum(s: DiagramSum) -> CenterPoly:
    return default_system().weight_sum(s)


def deframed_weight(d: ChordDiagram) -> CenterPoly:
    return default_system().deframed_weight(d)


def deframed_recurrence(d: ChordDiagram) -> CenterPoly:
    return default_system().deframed_recurrence(d)


def prop_reduction_checks(max_spectators: int = 2) -> VerificationReport:
    return default_system().prop_reduction_checks(max_spectators)
