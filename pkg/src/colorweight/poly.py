"""
Exact coefficient arithmetic.

``EpsCoeff`` is an element a + b*e of Z[e]/(e^2-1) and ``CenterPoly`` a commutative polynomial
in the two central variables c and y with ``EpsCoeff`` coefficients. Rationals (only needed by
the deframing projection) are plain ``fractions.Fraction`` values.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Any

from colorweight.errors import NonIntegralResultError

Rational = Fraction
Exponent = tuple[int, int]


def _e_part(magnitude: int) -> str:
    return "e" if magnitude == 1 else f"{magnitude}*e"


@dataclass(frozen=True, slots=True)
class EpsCoeff:
    """
    An element a + b*e of Z[e]/(e^2-1).

    Products are reduced with e^2 = 1 as they are formed, so (0, 0) is the only zero.

    Example:
        >>> EpsCoeff(0, 1) * EpsCoeff(0, 1)
        EpsCoeff(a=1, b=0)
    """

    a: int = 0
    b: int = 0

    @classmethod
    def coerce(cls, value: EpsCoeff | int) -> EpsCoeff:
        if isinstance(value, EpsCoeff):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value, 0)
        raise TypeError(f"cannot interpret {value!r} as an element of Z[e]/(e^2-1)")

    def __add__(self, other: EpsCoeff | int) -> EpsCoeff:
        other = EpsCoeff.coerce(other)
        return EpsCoeff(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> EpsCoeff:
        return EpsCoeff(-self.a, -self.b)

    def __sub__(self, other: EpsCoeff | int) -> EpsCoeff:
        return self + (-EpsCoeff.coerce(other))

    def __rsub__(self, other: EpsCoeff | int) -> EpsCoeff:
        return EpsCoeff.coerce(other) - self

    def __mul__(self, other: EpsCoeff | int) -> EpsCoeff:
        other = EpsCoeff.coerce(other)
        return EpsCoeff(
            self.a * other.a + self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> EpsCoeff:
        if exponent < 0:
            raise ValueError("negative powers are not defined in Z[e]/(e^2-1)")
        result = EpsCoeff(1, 0)
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    @property
    def is_zero(self) -> bool:
        return not self

    def evaluate(self, eps: int) -> int:
        """Collapse to an integer at e = eps (eps must be +1 or -1)."""
        if eps not in (1, -1):
            raise ValueError(f"e can only be specialised to +1 or -1, got {eps}")
        return self.a + self.b * eps

    def render(self) -> str:
        """Render as ``k``, ``k*e`` or ``(a+b*e)``."""
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return ("-" if self.b < 0 else "") + _e_part(abs(self.b))
        sign = "+" if self.b > 0 else "-"
        return f"({self.a}{sign}{_e_part(abs(self.b))})"

    def __str__(self) -> str:
        return self.render()


ZERO_COEFF = EpsCoeff(0, 0)
ONE_COEFF = EpsCoeff(1, 0)
EPS_COEFF = EpsCoeff(0, 1)


def _render_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("c" if i == 1 else f"c^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _render_term(coeff: EpsCoeff, monomial: str) -> tuple[bool, str]:
    """Return (is_negative, body) so the caller can join terms with `` + `` / `` - ``."""

    def attach(core: str) -> str:
        return f"{core}*{monomial}" if monomial else core

    if coeff.b == 0:
        magnitude = abs(coeff.a)
        if magnitude == 1 and monomial:
            return coeff.a < 0, monomial
        return coeff.a < 0, attach(str(magnitude))
    if coeff.a == 0:
        return coeff.b < 0, attach(_e_part(abs(coeff.b)))
    return False, attach(coeff.render())


class CenterPoly:
    """
    Polynomial in the central variables c and y over Z[e]/(e^2-1).

    Terms are stored as a map from (deg_c, deg_y) to a non-zero ``EpsCoeff``; equality is
    structural. Instances are immutable and hashable.

    Args:
        terms: mapping from exponent pairs to coefficients (ints are accepted).

    Example:
        >>> (C**2 - EPS * Y).render()
        'c^2 - e*y'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, EpsCoeff | int] | None = None):
        clean: dict[Exponent, EpsCoeff] = {}
        for exponent, value in (terms or {}).items():
            i, j = exponent
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {exponent}")
            coeff = EpsCoeff.coerce(value)
            if coeff:
                clean[(int(i), int(j))] = coeff
        self._terms = clean
        self._hash: int | None = None

    # ------------------------------------------------------------------ constructors

    @classmethod
    def constant(cls, value: EpsCoeff | int) -> CenterPoly:
        return cls({(0, 0): value})

    @classmethod
    def from_rational(cls, terms: Mapping[Exponent, tuple[Fraction, Fraction]]) -> CenterPoly:
        """Build from rational (a, b) pairs, insisting that every coefficient is integral."""
        integral: dict[Exponent, EpsCoeff] = {}
        for exponent, (a, b) in terms.items():
            a, b = Fraction(a), Fraction(b)
            if a.denominator != 1 or b.denominator != 1:
                raise NonIntegralResultError(
                    f"coefficient {a} + ({b})*e of c^{exponent[0]} y^{exponent[1]} is not integral"
                )
            integral[exponent] = EpsCoeff(int(a), int(b))
        return cls(integral)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> CenterPoly:
        from colorweight.schemas import CenterPolyJSON

        model = CenterPolyJSON.model_validate(data)
        terms: dict[Exponent, EpsCoeff] = {}
        for term in model.terms:
            key = (term.c, term.y)
            terms[key] = terms.get(key, ZERO_COEFF) + EpsCoeff(term.a, term.b)
        return cls(terms)

    # ------------------------------------------------------------------ access

    @property
    def terms(self) -> Mapping[Exponent, EpsCoeff]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, EpsCoeff]]:
        """Terms in graded-lex order: total degree descending, then deg_c descending."""
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), -item[0][0]))

    def __iter__(self) -> Iterator[tuple[Exponent, EpsCoeff]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=0)

    def coefficient(self, deg_c: int, deg_y: int) -> EpsCoeff:
        return self._terms.get((deg_c, deg_y), ZERO_COEFF)

    # ------------------------------------------------------------------ ring operations

    @staticmethod
    def _coerce(other: Any) -> CenterPoly | None:
        if isinstance(other, CenterPoly):
            return other
        if isinstance(other, EpsCoeff) or (isinstance(other, int) and not isinstance(other, bool)):
            return CenterPoly.constant(other)
        return None

    def __add__(self, other: Any) -> CenterPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for exponent, coeff in other._terms.items():
            merged[exponent] = merged.get(exponent, ZERO_COEFF) + coeff
        return CenterPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> CenterPoly:
        return CenterPoly({exponent: -coeff for exponent, coeff in self._terms.items()})

    def __sub__(self, other: Any) -> CenterPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> CenterPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> CenterPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: dict[Exponent, EpsCoeff] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                product[key] = product.get(key, ZERO_COEFF) + c1 * c2
        return CenterPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CenterPoly:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CenterPoly):
            return self._terms == other._terms
        coerced = self._coerce(other)
        return coerced is not None and self._terms == coerced._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ------------------------------------------------------------------ derived maps

    def substitute_c_zero(self) -> CenterPoly:
        return CenterPoly({(i, j): coeff for (i, j), coeff in self._terms.items() if i == 0})

    def d_dc(self) -> CenterPoly:
        """Formal partial derivative in c, with y independent."""
        return CenterPoly(
            {(i - 1, j): coeff * i for (i, j), coeff in self._terms.items() if i > 0}
        )

    def evaluate(self, eps: int) -> CenterPoly:
        """Specialise e to +1 or -1; the result has integer coefficients."""
        return CenterPoly(
            {exponent: coeff.evaluate(eps) for exponent, coeff in self._terms.items()}
        )

    # ------------------------------------------------------------------ rendering

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for position, ((i, j), coeff) in enumerate(self.sorted_terms()):
            negative, body = _render_term(coeff, _render_monomial(i, j))
            if position == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def to_json(self) -> dict[str, list[dict[str, int]]]:
        return {
            "terms": [
                {"c": i, "y": j, "a": coeff.a, "b": coeff.b}
                for (i, j), coeff in self.sorted_terms()
            ]
        }

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CenterPoly({self.render()!r})"


ZERO = CenterPoly()
ONE = CenterPoly.constant(1)
EPS = CenterPoly.constant(EPS_COEFF)
C = CenterPoly({(1, 0): 1})
Y = CenterPoly({(0, 1): 1})


# ============================================================================
# Functional interface
# ============================================================================


def cp_add(p: CenterPoly, q: CenterPoly) -> CenterPoly:
    return p + q


def cp_mul(p: CenterPoly, q: CenterPoly) -> CenterPoly:
    return p * q


def cp_substitute_c_zero(p: CenterPoly) -> CenterPoly:
    return p.substitute_c_zero()


def cp_d_dc(p: CenterPoly) -> CenterPoly:
    return p.d_dc()


def cp_eval(p: CenterPoly, eps: int) -> CenterPoly:
    return p.evaluate(eps)


class RationalAccumulator:
    """Collects rational multiples of ``CenterPoly`` values and checks integrality at the end."""

    def __init__(self) -> None:
        self._terms: dict[Exponent, tuple[Fraction, Fraction]] = {}

    def add(self, scale: Fraction | int, poly: CenterPoly) -> None:
        scale = Fraction(scale)
        for exponent, coeff in poly.terms.items():
            a, b = self._terms.get(exponent, (Fraction(0), Fraction(0)))
            self._terms[exponent] = (a + scale * coeff.a, b + scale * coeff.b)

    def result(self) -> CenterPoly:
        return CenterPoly.from_rational(self._terms)
