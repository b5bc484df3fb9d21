"""
The universal enveloping algebra of a color Lie algebra, in normal-ordered form.

Monomials are exponent tuples over the basis in its fixed order (H < Q1 < Q2 < Q3 for A1_e).
Adjacent generators out of order are rewritten with

    X_b X_a = e(b, a) X_a X_b + sum_c f_ba^c X_c        (b > a)
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from typing import Literal

import sympy

from colorweight.colorlie import ColorLieAlgebra, a1_epsilon, casimir
from colorweight.diagram import ChordDiagram, canonical_form, enumerate_diagrams, rotate
from colorweight.errors import (
    ComplexityGuardError,
    GradingError,
    NotCentralError,
    NotInSpanError,
)
from colorweight.poly import ONE_COEFF, ZERO_COEFF, CenterPoly, EpsCoeff
from colorweight.schemas import CheckResult

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Strategy = Literal["insertion", "leftmost", "rightmost"]

ORACLE_MAX_ORDER = 8


class EnvelopeElement:
    """
    Linear combination of normal-ordered monomials with ``EpsCoeff`` coefficients.

    Instances are immutable; arithmetic other than addition and scaling goes through
    ``UniversalEnvelope.multiply``.
    """

    __slots__ = ("_terms", "names")

    def __init__(self, terms: Mapping[Monomial, EpsCoeff | int] | None = None, names: Sequence[str] = ()):
        clean: dict[Monomial, EpsCoeff] = {}
        for monomial, value in (terms or {}).items():
            coeff = clean.get(monomial, ZERO_COEFF) + EpsCoeff.coerce(value)
            clean[monomial] = coeff
        self._terms = {m: c for m, c in clean.items() if c}
        self.names = tuple(names)

    @property
    def terms(self) -> dict[Monomial, EpsCoeff]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, EpsCoeff]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, monomial: Monomial) -> EpsCoeff:
        return self._terms.get(monomial, ZERO_COEFF)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def __add__(self, other: EnvelopeElement) -> EnvelopeElement:
        merged = dict(self._terms)
        for monomial, coeff in other._terms.items():
            merged[monomial] = merged.get(monomial, ZERO_COEFF) + coeff
        return EnvelopeElement(merged, self.names or other.names)

    def __neg__(self) -> EnvelopeElement:
        return EnvelopeElement({m: -c for m, c in self._terms.items()}, self.names)

    def __sub__(self, other: EnvelopeElement) -> EnvelopeElement:
        return self + (-other)

    def scale(self, factor: EpsCoeff | int) -> EnvelopeElement:
        factor = EpsCoeff.coerce(factor)
        return EnvelopeElement({m: c * factor for m, c in self._terms.items()}, self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EnvelopeElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, eps: int) -> dict[Monomial, int]:
        values = {m: c.evaluate(eps) for m, c in self._terms.items()}
        return {m: v for m, v in values.items() if v}

    def render(self) -> str:
        """``H^a Q1^b Q2^c Q3^d`` monomials in decreasing lex order of exponents."""
        if not self._terms:
            return "0"
        names = self.names or tuple(f"X{i}" for i in range(len(next(iter(self._terms)))))
        pieces = []
        for monomial, coeff in self:
            factors = [
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(names, monomial, strict=True)
                if power
            ]
            body = " ".join(factors)
            text = coeff.render()
            if body:
                if text == "1":
                    text = body
                elif text == "-1":
                    text = f"-{body}"
                else:
                    text = f"{text}*{body}"
            pieces.append(text)
        rendered = " + ".join(pieces)
        return rendered.replace("+ -", "- ")

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"EnvelopeElement({self.render()!r})"


class UniversalEnvelope:
    """
    Normal ordering and multiplication in U(g).

    Products of a normal monomial with one generator are memoised; they are the only
    primitive the ``insertion`` strategy and ``multiply`` need.

    Args:
        algebra: the color Lie algebra; A1_e when omitted.

    Raises:
        GradingError: if some basis element is odd for its own commuting factor, since its
            square would then leave the monomial basis.
    """

    def __init__(self, algebra: ColorLieAlgebra | None = None):
        self.algebra = algebra or a1_epsilon()
        self.logger = logging.getLogger(__name__)
        for index in range(self.algebra.dim):
            if self.algebra.eps(index, index) != 1:
                raise GradingError(
                    f"{self.algebra.names[index]} anticommutes with itself; normal monomials "
                    "would not be a basis"
                )
        self._brackets = {
            (b, a): self.algebra.bracket(b, a)
            for b in range(self.algebra.dim)
            for a in range(self.algebra.dim)
        }
        self._insert_memo: dict[tuple[Monomial, int], dict[Monomial, EpsCoeff]] = {}
        self._center_memo: dict[tuple[int, int], EnvelopeElement] = {}

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def names(self) -> tuple[str, ...]:
        return self.algebra.names

    def element(self, terms: Mapping[Monomial, EpsCoeff | int]) -> EnvelopeElement:
        return EnvelopeElement(terms, self.names)

    def one(self) -> EnvelopeElement:
        return self.element({(0,) * self.dim: ONE_COEFF})

    def generator(self, index: int) -> EnvelopeElement:
        monomial = [0] * self.dim
        monomial[index] = 1
        return self.element({tuple(monomial): ONE_COEFF})

    # ------------------------------------------------------------------ insertion

    def _times_generator(self, monomial: Monomial, g: int) -> dict[Monomial, EpsCoeff]:
        """Normal form of ``monomial * X_g``."""
        key = (monomial, g)
        cached = self._insert_memo.get(key)
        if cached is not None:
            return cached
        last = max((i for i, power in enumerate(monomial) if power), default=-1)
        if last <= g:
            grown = list(monomial)
            grown[g] += 1
            result = {tuple(grown): ONE_COEFF}
        else:
            shorter = list(monomial)
            shorter[last] -= 1
            rest = tuple(shorter)
            result: dict[Monomial, EpsCoeff] = {}
            sign = self.algebra.eps(last, g)
            for m, c in self._times_generator(rest, g).items():
                for m2, c2 in self._times_generator(m, last).items():
                    result[m2] = result.get(m2, ZERO_COEFF) + c * c2 * sign
            for rho, f in self._brackets[(last, g)].items():
                for m, c in self._times_generator(rest, rho).items():
                    result[m] = result.get(m, ZERO_COEFF) + c * f
            result = {m: c for m, c in result.items() if c}
        self._insert_memo[key] = result
        return result

    def _right_multiply(self, x: Mapping[Monomial, EpsCoeff], word: Iterable[int]) -> dict[Monomial, EpsCoeff]:
        current = dict(x)
        for g in word:
            updated: dict[Monomial, EpsCoeff] = {}
            for m, c in current.items():
                for m2, c2 in self._times_generator(m, g).items():
                    updated[m2] = updated.get(m2, ZERO_COEFF) + c * c2
            current = {m: c for m, c in updated.items() if c}
        return current

    @staticmethod
    def _word(monomial: Monomial) -> list[int]:
        return [i for i, power in enumerate(monomial) for _ in range(power)]

    # ------------------------------------------------------------------ word rewriting

    def _rewrite(self, word: Sequence[int], leftmost: bool) -> dict[Monomial, EpsCoeff]:
        pending: dict[tuple[int, ...], EpsCoeff] = {tuple(word): ONE_COEFF}
        done: dict[Monomial, EpsCoeff] = {}
        while pending:
            w, coeff = pending.popitem()
            descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
            if not descents:
                monomial = [0] * self.dim
                for g in w:
                    monomial[g] += 1
                key = tuple(monomial)
                done[key] = done.get(key, ZERO_COEFF) + coeff
                continue
            i = descents[0] if leftmost else descents[-1]
            b, a = w[i], w[i + 1]
            swapped = w[:i] + (a, b) + w[i + 2 :]
            pending[swapped] = pending.get(swapped, ZERO_COEFF) + coeff * self.algebra.eps(b, a)
            for rho, f in self._brackets[(b, a)].items():
                contracted = w[:i] + (rho,) + w[i + 2 :]
                pending[contracted] = pending.get(contracted, ZERO_COEFF) + coeff * f
            pending = {k: v for k, v in pending.items() if v}
        return {m: c for m, c in done.items() if c}

    def normal_order(self, word: Sequence[int], strategy: Strategy = "insertion") -> EnvelopeElement:
        """
        Normal form of a product of generators.

        ``insertion`` multiplies generators into a memoised normal monomial one at a time;
        ``leftmost`` and ``rightmost`` rewrite the first or last descent of the word.
        """
        if any(not 0 <= g < self.dim for g in word):
            raise ValueError(f"generator index out of range in {list(word)}")
        if strategy == "insertion":
            return self.element(self._right_multiply({(0,) * self.dim: ONE_COEFF}, word))
        if strategy in ("leftmost", "rightmost"):
            return self.element(self._rewrite(word, leftmost=strategy == "leftmost"))
        raise ValueError(f"unknown normal-ordering strategy {strategy!r}")

    def multiply(self, x: EnvelopeElement, y: EnvelopeElement) -> EnvelopeElement:
        total: dict[Monomial, EpsCoeff] = {}
        for monomial, coeff in y._terms.items():
            product = self._right_multiply(x._terms, self._word(monomial))
            for m, c in product.items():
                total[m] = total.get(m, ZERO_COEFF) + c * coeff
        return self.element(total)

    def is_central(self, x: EnvelopeElement) -> bool:
        return all(
            self.multiply(x, self.generator(g)) == self.multiply(self.generator(g), x)
            for g in range(self.dim)
        )

    # ------------------------------------------------------------------ center

    def casimir_element(self) -> EnvelopeElement:
        """sum C^{ab} X_a X_b."""
        total = self.element({})
        for (a, b), coeff in casimir(self.algebra).items():
            total = total + self.normal_order([a, b]).scale(coeff)
        return total

    def y_element(self) -> EnvelopeElement:
        """The Casimir with the square of the central generator H removed."""
        h = self.algebra.index("H")
        return self.casimir_element() - self.normal_order([h, h])

    def _center_monomial(self, deg_c: int, deg_y: int) -> EnvelopeElement:
        key = (deg_c, deg_y)
        cached = self._center_memo.get(key)
        if cached is None:
            if deg_c:
                cached = self.multiply(self._center_monomial(deg_c - 1, deg_y), self.casimir_element())
            elif deg_y:
                cached = self.multiply(self._center_monomial(0, deg_y - 1), self.y_element())
            else:
                cached = self.one()
            self._center_memo[key] = cached
        return cached

    def expand_center(self, p: CenterPoly) -> EnvelopeElement:
        """Substitute the Casimir for c and the y element for y."""
        total = self.element({})
        for (deg_c, deg_y), coeff in p.terms.items():
            total = total + self._center_monomial(deg_c, deg_y).scale(coeff)
        return total

    def express_in_center(self, x: EnvelopeElement, max_order: int) -> CenterPoly:
        """
        Write a central element as a polynomial in c and y of total degree at most ``max_order``.

        One exact linear system is solved per value of e; the two solutions recombine into
        Z[e]/(e^2-1) coefficients.

        Raises:
            NotCentralError: if ``x`` does not commute with every generator.
            NotInSpanError: if ``x`` is not such a polynomial.
        """
        if not self.is_central(x):
            raise NotCentralError(f"element {x.render()} is not central")
        candidates = [
            (deg_c, deg_y)
            for total in range(max_order + 1)
            for deg_c in range(total, -1, -1)
            for deg_y in [total - deg_c]
        ]
        expansions = [self._center_monomial(*exponent) for exponent in candidates]
        monomials = sorted(set(x.terms).union(*(e.terms for e in expansions)))
        solutions: dict[int, list[sympy.Rational]] = {}
        for eps in (1, -1):
            columns = [e.evaluate(eps) for e in expansions]
            target = x.evaluate(eps)
            matrix = sympy.Matrix(
                [[column.get(m, 0) for column in columns] for m in monomials]
            )
            rhs = sympy.Matrix([target.get(m, 0) for m in monomials])
            try:
                solution, params = matrix.gauss_jordan_solve(rhs)
            except ValueError as exc:
                raise NotInSpanError(
                    f"central element {x.render()} is not a polynomial in c and y of degree "
                    f"<= {max_order} (e={eps})"
                ) from exc
            if params.shape[0]:
                solution = solution.subs({p: 0 for p in params})
            solutions[eps] = list(solution)
        terms = {
            exponent: (
                (sympy.Rational(solutions[1][i]) + sympy.Rational(solutions[-1][i])) / 2,
                (sympy.Rational(solutions[1][i]) - sympy.Rational(solutions[-1][i])) / 2,
            )
            for i, exponent in enumerate(candidates)
        }
        return CenterPoly.from_rational(
            {
                exponent: (Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)))
                for exponent, (a, b) in terms.items()
            }
        )

    # ------------------------------------------------------------------ oracle

    def oracle_weight(self, d: ChordDiagram, cut: int = 0) -> EnvelopeElement:
        """
        Brute-force value of the weight system in U(g).

        The circle is read from position ``cut``. Every chord carries a pair of labels
        (mu, nu) weighted by C^{mu nu}: X_mu at the opening end and X_nu at the closing end.
        Each pair of interleaving chords contributes e(mu_i, mu_j). Partial products are
        grouped by the labels of the chords still open, so the sum is a dynamic program over
        positions.

        Raises:
            ComplexityGuardError: above order 8.
        """
        if d.order > ORACLE_MAX_ORDER:
            raise ComplexityGuardError(
                f"the oracle supports diagrams up to order {ORACLE_MAX_ORDER}, got {d.order}"
            )
        if d.size and not 0 <= cut < d.size:
            raise ValueError(f"cut must lie in 0..{d.size - 1}, got {cut}")
        reading = rotate(d, cut) if d.size else d
        form = casimir(self.algebra)
        closing = {mu: [(nu, c) for (a, nu), c in form.items() if a == mu] for mu in range(self.dim)}
        states: dict[tuple[tuple[int, int], ...], dict[Monomial, EpsCoeff]] = {
            (): {(0,) * self.dim: ONE_COEFF}
        }
        for position in range(reading.size):
            partner = reading.pairing[position]
            updated: dict[tuple[tuple[int, int], ...], dict[Monomial, EpsCoeff]] = {}
            for open_chords, value in states.items():
                if partner > position:
                    for mu in range(self.dim):
                        key = open_chords + ((position, mu),)
                        branch = self._right_multiply(value, [mu])
                        self._accumulate(updated, key, branch, ONE_COEFF)
                    continue
                where = next(i for i, (p, _) in enumerate(open_chords) if p == partner)
                mu = open_chords[where][1]
                sign = 1
                for _, later in open_chords[where + 1 :]:
                    sign *= self.algebra.eps(mu, later)
                key = open_chords[:where] + open_chords[where + 1 :]
                for nu, weight in closing[mu]:
                    branch = self._right_multiply(value, [nu])
                    self._accumulate(updated, key, branch, weight * sign)
            states = updated
        result = states.get((), {})
        self.logger.debug(f"oracle on {d} (cut {cut}) produced {len(result)} monomials")
        return self.element(result)

    @staticmethod
    def _accumulate(
        table: dict[tuple[tuple[int, int], ...], dict[Monomial, EpsCoeff]],
        key: tuple[tuple[int, int], ...],
        branch: Mapping[Monomial, EpsCoeff],
        weight: EpsCoeff,
    ) -> None:
        target = table.setdefault(key, {})
        for m, c in branch.items():
            target[m] = target.get(m, ZERO_COEFF) + c * weight
        for m in [m for m, c in target.items() if not c]:
            del target[m]

    def oracle_center_weight(self, d: ChordDiagram, cut: int = 0) -> CenterPoly:
        return self.express_in_center(self.oracle_weight(d, cut), d.order)

    def scan_cut_dependence(self, max_order: int = 4) -> CheckResult:
        """Report (never assert) diagrams whose oracle value depends on the cut."""
        notes: list[str] = []
        instances = 0
        for n in range(1, max_order + 1):
            for d in enumerate_diagrams(n):
                values = set()
                for cut in range(d.size):
                    instances += 1
                    try:
                        values.add(self.oracle_center_weight(d, cut).render())
                    except NotCentralError:
                        values.add(f"non-central at cut {cut}")
                if len(values) > 1:
                    self.logger.warning(f"weight of {d} depends on the cut: {sorted(values)}")
                    notes.append(f"{d}: {sorted(values)}")
        return CheckResult(
            name="cut dependence",
            passed=not notes,
            instances=instances,
            assertive=False,
            notes=notes or ["no cut dependence found"],
        )


def confluence_words(count: int, max_length: int, dim: int = 4, seed: int = 0) -> list[tuple[int, ...]]:
    """Deterministic pseudo-random generator words for confluence checks."""
    rng = random.Random(seed)
    words = []
    for _ in range(count):
        length = rng.randint(0, max_length)
        words.append(tuple(rng.randrange(dim) for _ in range(length)))
    return words


def all_words(length: int, dim: int = 4) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(dim), repeat=length)


def canonical_oracle_table(envelope: UniversalEnvelope, order: int) -> dict[ChordDiagram, CenterPoly]:
    return {canonical_form(d): envelope.oracle_center_weight(d) for d in enumerate_diagrams(order)}
