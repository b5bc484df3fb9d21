"""
Z2xZ2-graded color Lie algebras.

Structure constants and forms carry ``EpsCoeff`` values. Identities are verified by
specialising e to +1 and to -1 separately: Z[e]/(e^2-1) embeds into Z x Z through the two
evaluations, so an identity holds symbolically iff it holds at both values.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Literal, NamedTuple

import sympy

from colorweight.errors import DegenerateFormError, GradingError, MNotCentralError
from colorweight.poly import EPS_COEFF, ONE_COEFF, ZERO_COEFF, EpsCoeff
from colorweight.schemas import AlgebraSpec, CheckResult, VerificationReport

logger = logging.getLogger(__name__)

EPS_VALUES = (1, -1)


class Degree(NamedTuple):
    d1: int
    d2: int

    def __add__(self, other: Degree) -> Degree:  # type: ignore[override]
        return Degree((self.d1 + other.d1) % 2, (self.d2 + other.d2) % 2)

    def __str__(self) -> str:
        return f"({self.d1},{self.d2})"


ALL_DEGREES = tuple(Degree(a, b) for a in (0, 1) for b in (0, 1))
ZERO_DEGREE = Degree(0, 0)


# ============================================================================
# Commuting factors
# ============================================================================


@dataclass(frozen=True)
class CommutingFactor:
    """
    The bicharacter e(alpha, beta) = (-1)^(alpha.beta) on Z2xZ2.

    ``graded_lie`` pairs degrees as a1*b2 - a2*b1, ``graded_superlie`` as a1*b1 + a2*b2.
    """

    kind: Literal["graded_lie", "graded_superlie"] = "graded_lie"

    def pairing(self, alpha: Degree, beta: Degree) -> int:
        if self.kind == "graded_lie":
            return (alpha[0] * beta[1] - alpha[1] * beta[0]) % 2
        return (alpha[0] * beta[0] + alpha[1] * beta[1]) % 2

    def __call__(self, alpha: Degree, beta: Degree) -> int:
        return -1 if self.pairing(alpha, beta) else 1

    def check_identities(self) -> CheckResult:
        """Symmetry e(a,b)e(b,a) = 1 and bi-additivity in both slots, over all of Z2xZ2."""
        instances = 0
        for alpha, beta in itertools.product(ALL_DEGREES, repeat=2):
            instances += 1
            if self(alpha, beta) * self(beta, alpha) != 1:
                return CheckResult(
                    name=f"{self.kind} commuting factor",
                    passed=False,
                    instances=instances,
                    failure=f"e{alpha, beta} e{beta, alpha} != 1",
                )
        for alpha, beta, gamma in itertools.product(ALL_DEGREES, repeat=3):
            instances += 1
            left = self(alpha, beta + gamma) == self(alpha, beta) * self(alpha, gamma)
            right = self(alpha + beta, gamma) == self(alpha, gamma) * self(beta, gamma)
            if not (left and right):
                return CheckResult(
                    name=f"{self.kind} commuting factor",
                    passed=False,
                    instances=instances,
                    failure=f"bi-additivity fails on {alpha}, {beta}, {gamma}",
                )
        return CheckResult(name=f"{self.kind} commuting factor", passed=True, instances=instances)


# ============================================================================
# The algebra container
# ============================================================================

FormMatrix = tuple[tuple[EpsCoeff, ...], ...]


def _coefficient(value: int | tuple[int, int] | EpsCoeff) -> EpsCoeff:
    if isinstance(value, tuple):
        return EpsCoeff(*value)
    return EpsCoeff.coerce(value)


@dataclass(frozen=True)
class ColorLieAlgebra:
    """
    Basis, grading, structure constants f_{mu nu}^rho and an optional bilinear form B.

    Example:
        >>> g = a1_epsilon()
        >>> g.bracket(1, 2)
        {3: EpsCoeff(a=1, b=0)}
    """

    names: tuple[str, ...]
    degrees: tuple[Degree, ...]
    structure: Mapping[tuple[int, int, int], EpsCoeff] = field(default_factory=dict)
    form: FormMatrix | None = None
    factor: CommutingFactor = CommutingFactor()

    def __post_init__(self) -> None:
        if len(self.names) != len(self.degrees):
            raise GradingError("every basis element needs exactly one degree")
        clean = {key: _coefficient(value) for key, value in self.structure.items()}
        object.__setattr__(self, "structure", {k: v for k, v in clean.items() if v})
        if self.form is not None:
            size = len(self.names)
            if len(self.form) != size or any(len(row) != size for row in self.form):
                raise GradingError(f"form must be a {size}x{size} matrix")
            form = tuple(tuple(_coefficient(entry) for entry in row) for row in self.form)
            object.__setattr__(self, "form", form)

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def f(self, mu: int, nu: int, rho: int) -> EpsCoeff:
        return self.structure.get((mu, nu, rho), ZERO_COEFF)

    def bracket(self, mu: int, nu: int) -> dict[int, EpsCoeff]:
        """[X_mu, X_nu] as a map from basis index to coefficient."""
        return {rho: value for (a, b, rho), value in self.structure.items() if (a, b) == (mu, nu)}

    def eps(self, mu: int, nu: int) -> int:
        """Commuting factor of two basis elements."""
        return self.factor(self.degrees[mu], self.degrees[nu])

    # ------------------------------------------------------------------ variants

    @classmethod
    def from_spec(cls, spec: AlgebraSpec) -> ColorLieAlgebra:
        structure: dict[tuple[int, int, int], EpsCoeff] = {}
        for mu, nu, rho, coeff in spec.structure_constants:
            structure[(mu, nu, rho)] = structure.get((mu, nu, rho), ZERO_COEFF) + _coefficient(coeff)
        form = None
        if spec.form is not None:
            form = tuple(tuple(_coefficient(entry) for entry in row) for row in spec.form)
        return cls(
            names=tuple(b.name for b in spec.basis),
            degrees=tuple(Degree(*b.degree) for b in spec.basis),
            structure=structure,
            form=form,
            factor=CommutingFactor(spec.factor),
        )

    def with_structure_constant(
        self, mu: int, nu: int, rho: int, value: int | tuple[int, int] | EpsCoeff
    ) -> ColorLieAlgebra:
        structure = dict(self.structure)
        structure[(mu, nu, rho)] = _coefficient(value)
        return replace(self, structure=structure)

    def with_form(self, form: Iterable[Iterable[int | tuple[int, int] | EpsCoeff]]) -> ColorLieAlgebra:
        return replace(self, form=tuple(tuple(_coefficient(v) for v in row) for row in form))

    # ------------------------------------------------------------------ specialisation

    def f_at(self, mu: int, nu: int, rho: int, eps: int) -> int:
        return self.f(mu, nu, rho).evaluate(eps)

    def form_at(self, eps: int) -> sympy.Matrix:
        if self.form is None:
            raise DegenerateFormError("the algebra carries no bilinear form")
        return sympy.Matrix([[entry.evaluate(eps) for entry in row] for row in self.form])


def a1_epsilon() -> ColorLieAlgebra:
    """The four-dimensional algebra spanned by the central H and Q1, Q2, Q3."""
    structure = {
        (1, 2, 3): ONE_COEFF,
        (2, 1, 3): ONE_COEFF,
        (2, 3, 1): EPS_COEFF,
        (3, 2, 1): EPS_COEFF,
        (3, 1, 2): ONE_COEFF,
        (1, 3, 2): ONE_COEFF,
    }
    form = (
        (ONE_COEFF, ZERO_COEFF, ZERO_COEFF, ZERO_COEFF),
        (ZERO_COEFF, EPS_COEFF, ZERO_COEFF, ZERO_COEFF),
        (ZERO_COEFF, ZERO_COEFF, ONE_COEFF, ZERO_COEFF),
        (ZERO_COEFF, ZERO_COEFF, ZERO_COEFF, ONE_COEFF),
    )
    return ColorLieAlgebra(
        names=("H", "Q1", "Q2", "Q3"),
        degrees=(Degree(0, 0), Degree(1, 0), Degree(0, 1), Degree(1, 1)),
        structure=structure,
        form=form,
    )


# ============================================================================
# Axiom checks
# ============================================================================


def _triple_name(g: ColorLieAlgebra, indices: Iterable[int]) -> str:
    return "(" + ", ".join(g.names[i] for i in indices) + ")"


def _bracket_vector(g: ColorLieAlgebra, x: Mapping[int, int], y: Mapping[int, int], eps: int) -> dict[int, int]:
    """Bilinear bracket of two vectors given as index -> integer coefficient at a fixed e."""
    out: dict[int, int] = {}
    for a, xa in x.items():
        for b, yb in y.items():
            for rho, value in g.bracket(a, b).items():
                out[rho] = out.get(rho, 0) + xa * yb * value.evaluate(eps)
    return {k: v for k, v in out.items() if v}


def check_color_axioms(g: ColorLieAlgebra) -> VerificationReport:
    """Grading compatibility, e-antisymmetry and the e-Jacobi identity on all basis triples."""
    report = VerificationReport(suite="color-axioms")

    grading_failure = None
    for (mu, nu, rho), _ in sorted(g.structure.items()):
        if g.degrees[rho] != g.degrees[mu] + g.degrees[nu]:
            grading_failure = f"f_{{{g.names[mu]} {g.names[nu]}}}^{g.names[rho]} has the wrong degree"
            break
    report.checks.append(
        CheckResult(
            name="grading",
            passed=grading_failure is None,
            instances=len(g.structure),
            failure=grading_failure,
        )
    )

    antisymmetry_failure = None
    count = 0
    for mu, nu, rho in itertools.product(range(g.dim), repeat=3):
        count += 1
        for eps in EPS_VALUES:
            if g.f_at(mu, nu, rho, eps) != -g.eps(mu, nu) * g.f_at(nu, mu, rho, eps):
                antisymmetry_failure = f"{_triple_name(g, (mu, nu, rho))} at e={eps}"
                break
        if antisymmetry_failure:
            break
    report.checks.append(
        CheckResult(
            name="e-antisymmetry",
            passed=antisymmetry_failure is None,
            instances=count,
            failure=antisymmetry_failure,
        )
    )

    jacobi_failure = None
    count = 0
    for a, b, c in itertools.product(range(g.dim), repeat=3):
        count += 1
        x, y, z = {a: 1}, {b: 1}, {c: 1}
        for eps in EPS_VALUES:
            total: dict[int, int] = {}
            for sign, first, inner in (
                (g.eps(c, a), x, (y, z)),
                (g.eps(a, b), y, (z, x)),
                (g.eps(b, c), z, (x, y)),
            ):
                term = _bracket_vector(g, first, _bracket_vector(g, *inner, eps), eps)
                for k, v in term.items():
                    total[k] = total.get(k, 0) + sign * v
            if any(total.values()):
                jacobi_failure = f"{_triple_name(g, (a, b, c))} at e={eps}"
                break
        if jacobi_failure:
            break
    report.checks.append(
        CheckResult(
            name="e-Jacobi", passed=jacobi_failure is None, instances=count, failure=jacobi_failure
        )
    )
    return report


# ------------------------------------------------------------------ tensor maps

TensorKey = tuple[int, ...]
TensorVector = dict[TensorKey, int]
TensorMap = Callable[[TensorKey], TensorVector]


def _apply(op: TensorMap, vector: TensorVector) -> TensorVector:
    out: TensorVector = {}
    for key, coeff in vector.items():
        for image, value in op(key).items():
            out[image] = out.get(image, 0) + coeff * value
    return {k: v for k, v in out.items() if v}


def _compose(*ops: TensorMap) -> TensorMap:
    """Operator product, rightmost applied first."""

    def composed(key: TensorKey) -> TensorVector:
        vector: TensorVector = {key: 1}
        for op in reversed(ops):
            vector = _apply(op, vector)
        return vector

    return composed


def _on(op: TensorMap, position: int, arity: int) -> TensorMap:
    """Act with ``op`` on the tensor factors ``position .. position+arity-1``."""

    def lifted(key: TensorKey) -> TensorVector:
        head, middle, tail = key[:position], key[position : position + arity], key[position + arity :]
        return {head + image + tail: value for image, value in op(middle).items()}

    return lifted


def _braiding(g: ColorLieAlgebra) -> TensorMap:
    def s(key: TensorKey) -> TensorVector:
        a, b = key
        return {(b, a): g.eps(a, b)}

    return s


def _bracket_map(g: ColorLieAlgebra, eps: int) -> TensorMap:
    def f(key: TensorKey) -> TensorVector:
        a, b = key
        image = {(rho,): value.evaluate(eps) for rho, value in g.bracket(a, b).items()}
        return {k: v for k, v in image.items() if v}

    return f


def _form_map(form: sympy.Matrix) -> TensorMap:
    def b(key: TensorKey) -> TensorVector:
        value = form[key[0], key[1]]
        return {(): int(value)} if value else {}

    return b


def _identity_check(
    g: ColorLieAlgebra,
    name: str,
    arity: int,
    build: Callable[[int], tuple[TensorMap, TensorMap]],
) -> CheckResult:
    count = 0
    maps = {eps: build(eps) for eps in EPS_VALUES}
    for key in itertools.product(range(g.dim), repeat=arity):
        count += 1
        for eps, (lhs, rhs) in maps.items():
            if lhs(key) != rhs(key):
                return CheckResult(
                    name=name,
                    passed=False,
                    instances=count,
                    failure=f"{_triple_name(g, key)} at e={eps}",
                )
    return CheckResult(name=name, passed=True, instances=count)


def check_s_lie_axioms(g: ColorLieAlgebra) -> VerificationReport:
    """
    The six braiding/bracket identities with S(X, Y) = e(deg X, deg Y) Y (x) X.

    Operator products are read right to left; ``S12`` acts on the first two tensor factors.
    """
    s = _braiding(g)
    s12, s23 = _on(s, 0, 2), _on(s, 1, 2)

    def identity(key: TensorKey) -> TensorVector:
        return {key: 1}

    def sl1(eps: int) -> tuple[TensorMap, TensorMap]:
        return _compose(s, s), identity

    def sl2(eps: int) -> tuple[TensorMap, TensorMap]:
        return _compose(s12, s23, s12), _compose(s23, s12, s23)

    def sl3(eps: int) -> tuple[TensorMap, TensorMap]:
        f = _bracket_map(g, eps)
        return _compose(s, _on(f, 0, 2)), _compose(_on(f, 1, 2), s12, s23)

    def sl4(eps: int) -> tuple[TensorMap, TensorMap]:
        f = _bracket_map(g, eps)
        return _compose(s, _on(f, 1, 2)), _compose(_on(f, 0, 2), s23, s12)

    def sl5(eps: int) -> tuple[TensorMap, TensorMap]:
        f = _bracket_map(g, eps)

        def minus_f(key: TensorKey) -> TensorVector:
            return {k: -v for k, v in f(key).items()}

        return _compose(f, s), minus_f

    def sl6(eps: int) -> tuple[TensorMap, TensorMap]:
        f = _bracket_map(g, eps)
        f12, f23 = _on(f, 0, 2), _on(f, 1, 2)
        first = _compose(f, f23)
        second = _compose(f, f23, s12)

        def rhs(key: TensorKey) -> TensorVector:
            out = dict(first(key))
            for k, v in second(key).items():
                out[k] = out.get(k, 0) - v
            return {k: v for k, v in out.items() if v}

        return _compose(f, f12), rhs

    report = VerificationReport(suite="s-lie")
    for name, arity, build in (
        ("S^2 = id", 2, sl1),
        ("S12 S23 S12 = S23 S12 S23", 3, sl2),
        ("S f12 = f23 S12 S23", 3, sl3),
        ("S f23 = f12 S23 S12", 3, sl4),
        ("f S = -f", 2, sl5),
        ("f f12 = f f23 - f f23 S12", 3, sl6),
    ):
        report.checks.append(_identity_check(g, name, arity, build))
    return report


# ============================================================================
# Forms, inverse forms and the Casimir
# ============================================================================


def _require_nondegenerate(g: ColorLieAlgebra) -> dict[int, sympy.Matrix]:
    forms = {eps: g.form_at(eps) for eps in EPS_VALUES}
    for eps, form in forms.items():
        if form.det() == 0:
            raise DegenerateFormError(f"bilinear form is degenerate at e={eps}")
    return forms


def _recombine(plus: Fraction, minus: Fraction) -> EpsCoeff:
    a, b = (plus + minus) / 2, (plus - minus) / 2
    if a.denominator != 1 or b.denominator != 1:
        raise DegenerateFormError(f"inverse form entry {a} + ({b})*e is not integral")
    return EpsCoeff(int(a), int(b))


def inverse_form(g: ColorLieAlgebra) -> FormMatrix:
    """C = B^-1 with entries in Z[e]/(e^2-1)."""
    forms = _require_nondegenerate(g)
    inverses = {eps: form.inv() for eps, form in forms.items()}
    return tuple(
        tuple(
            _recombine(Fraction(str(inverses[1][i, j])), Fraction(str(inverses[-1][i, j])))
            for j in range(g.dim)
        )
        for i in range(g.dim)
    )


def check_casimir_conditions(g: ColorLieAlgebra) -> VerificationReport:
    """
    Invariance of B and its compatibility with the braiding.

    Raises:
        DegenerateFormError: if B is missing or singular for some value of e.
    """
    forms = _require_nondegenerate(g)
    inverse = inverse_form(g)
    s = _braiding(g)

    def invariance(eps: int) -> tuple[TensorMap, TensorMap]:
        f, b = _bracket_map(g, eps), _form_map(forms[eps])
        return _compose(b, _on(f, 0, 2)), _compose(b, _on(f, 1, 2))

    def braiding(eps: int) -> tuple[TensorMap, TensorMap]:
        b = _form_map(forms[eps])
        return _compose(_on(b, 0, 2), _on(s, 1, 2)), _compose(_on(b, 1, 2), _on(s, 0, 2))

    report = VerificationReport(suite="casimir-conditions")
    report.checks.append(_identity_check(g, "B f12 = B f23", 3, invariance))
    report.checks.append(_identity_check(g, "B12 S23 = B23 S12", 3, braiding))

    # sum_k S_jk^mn C^kl = sum_k C^mk S_kj^nl, with S_jk^mn = e(j,k) d_mk d_nj
    failure = None
    count = 0
    for j, m, n, l in itertools.product(range(g.dim), repeat=4):
        count += 1
        lhs = g.eps(j, m) * inverse[m][l] if n == j else ZERO_COEFF
        rhs = g.eps(l, j) * inverse[m][l] if n == j else ZERO_COEFF
        if lhs != rhs:
            failure = f"(j, m, n, l) = {_triple_name(g, (j, m, n, l))}"
            break
    report.checks.append(
        CheckResult(name="S C = C S", passed=failure is None, instances=count, failure=failure)
    )
    return report


def casimir(g: ColorLieAlgebra) -> dict[tuple[int, int], EpsCoeff]:
    """The quadratic Casimir sum_{a,b} C^{ab} X_a X_b as index pairs with coefficients."""
    inverse = inverse_form(g)
    return {
        (a, b): inverse[a][b]
        for a in range(g.dim)
        for b in range(g.dim)
        if inverse[a][b]
    }


def check_form_symmetry(g: ColorLieAlgebra, degree: Degree = ZERO_DEGREE) -> CheckResult:
    """B_ab = e(a, m) B_ba for a form of degree ``m``."""
    if g.form is None:
        raise DegenerateFormError("the algebra carries no bilinear form")
    count = 0
    for a, b in itertools.product(range(g.dim), repeat=2):
        count += 1
        sign = g.factor(g.degrees[a], degree)
        if g.form[a][b] != g.form[b][a] * sign:
            return CheckResult(
                name="form symmetry",
                passed=False,
                instances=count,
                failure=_triple_name(g, (a, b)),
            )
    return CheckResult(name="form symmetry", passed=True, instances=count)


def ftilde(g: ColorLieAlgebra) -> dict[tuple[int, int, int], EpsCoeff]:
    """Raised structure constants sum_a f_ij^a C^{ak} on the non-central generators."""
    inverse = inverse_form(g)
    indices = range(1, g.dim)
    out = {}
    for i, j, k in itertools.product(indices, repeat=3):
        value = ZERO_COEFF
        for a in range(g.dim):
            value = value + g.f(i, j, a) * inverse[a][k]
        if value:
            out[(i, j, k)] = value
    return out


def check_ftilde_contraction(g: ColorLieAlgebra) -> CheckResult:
    """sum_a ft_ia^j ft_ak^l = d_ik d_jl - e(k, l) d_il d_jk over all generator quadruples."""
    table = ftilde(g)
    indices = range(1, g.dim)
    count = 0
    for i, j, k, l in itertools.product(indices, repeat=4):
        count += 1
        lhs = ZERO_COEFF
        for a in indices:
            lhs = lhs + table.get((i, a, j), ZERO_COEFF) * table.get((a, k, l), ZERO_COEFF)
        rhs = int(i == k and j == l) - g.eps(k, l) * int(i == l and j == k)
        if lhs != EpsCoeff.coerce(rhs):
            return CheckResult(
                name="ftilde contraction",
                passed=False,
                instances=count,
                failure=_triple_name(g, (i, j, k, l)),
            )
    return CheckResult(name="ftilde contraction", passed=True, instances=count)


# ============================================================================
# Graded matrices and the representation
# ============================================================================

E, S = sympy.symbols("e s")
_RELATIONS = [S**2 - 2 * E, E**2 - 1]


def reduce_entry(expr: sympy.Expr) -> sympy.Expr:
    """Normal form modulo s^2 = 2e and e^2 = 1."""
    expr = sympy.expand(expr)
    if expr == 0:
        return sympy.Integer(0)
    _, remainder = sympy.reduced(expr, _RELATIONS, S, E)
    return sympy.expand(remainder)


@dataclass(frozen=True)
class GradedMatrix:
    """
    A square matrix over Z[e, s]/(e^2-1, s^2-2e) on a Z2xZ2-graded space.

    ``blocks`` lists the degree of each basis vector of the underlying space; an entry
    (i, j) may be non-zero only when blocks[i] = blocks[j] + degree.
    """

    entries: sympy.Matrix
    blocks: tuple[Degree, ...]
    degree: Degree

    def __post_init__(self) -> None:
        size = len(self.blocks)
        if self.entries.shape != (size, size):
            raise GradingError(f"expected a {size}x{size} matrix, got {self.entries.shape}")
        reduced = self.entries.applyfunc(reduce_entry)
        object.__setattr__(self, "entries", reduced)
        for i, j in itertools.product(range(size), repeat=2):
            if reduced[i, j] != 0 and self.blocks[i] != self.blocks[j] + self.degree:
                raise GradingError(f"entry ({i}, {j}) violates the block layout of degree {self.degree}")

    @classmethod
    def identity(cls, blocks: tuple[Degree, ...]) -> GradedMatrix:
        return cls(sympy.eye(len(blocks)), blocks, ZERO_DEGREE)

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        return GradedMatrix(self.entries * other.entries, self.blocks, self.degree + other.degree)

    def __add__(self, other: GradedMatrix) -> GradedMatrix:
        if self.degree != other.degree:
            raise GradingError("cannot add graded matrices of different degrees")
        return GradedMatrix(self.entries + other.entries, self.blocks, self.degree)

    def scaled(self, scale: sympy.Expr) -> GradedMatrix:
        return GradedMatrix(self.entries * scale, self.blocks, self.degree)

    def is_zero(self) -> bool:
        return all(entry == 0 for entry in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            self.blocks == other.blocks
            and (self.entries - other.entries).applyfunc(reduce_entry).is_zero_matrix
            and (self.degree == other.degree or self.is_zero())
        )


def graded_trace(m: GradedMatrix) -> sympy.Expr:
    """Sum of the traces of the degree-(0,0) diagonal blocks; zero for other degrees."""
    if m.degree != ZERO_DEGREE:
        return sympy.Integer(0)
    return reduce_entry(m.entries.trace())


def graded_commutator(factor: CommutingFactor, x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    sign = factor(x.degree, y.degree)
    product = x @ y
    return GradedMatrix(
        product.entries - sign * (y @ x).entries, x.blocks, product.degree
    )


REPRESENTATION_BLOCKS = (Degree(0, 0), Degree(1, 0), Degree(0, 1), Degree(1, 1))


def a1_epsilon_representation() -> dict[str, GradedMatrix]:
    """
    The reducible four-dimensional representation of A1_e on v00, v10, v01, v11.

    H acts by s = sqrt(2e) on v00; Q1 swaps v01 and v11, Q2 sends v10 to v11 and v11 to e*v10,
    Q3 sends v10 to v01 and v01 to e*v10.
    """

    def matrix(degree: Degree, **entries: sympy.Expr) -> GradedMatrix:
        m = sympy.zeros(4, 4)
        for key, value in entries.items():
            m[int(key[1]), int(key[2])] = value
        return GradedMatrix(m, REPRESENTATION_BLOCKS, degree)

    return {
        "H": matrix(Degree(0, 0), m00=S),
        "Q1": matrix(Degree(1, 0), m32=1, m23=1),
        "Q2": matrix(Degree(0, 1), m31=1, m13=E),
        "Q3": matrix(Degree(1, 1), m21=1, m12=E),
    }


def _expr_to_coeff(expr: sympy.Expr) -> EpsCoeff:
    expr = reduce_entry(expr)
    if expr.has(S):
        raise GradingError(f"{expr} is not an element of Z[e]/(e^2-1)")
    poly = sympy.Poly(expr, E)
    a = poly.coeff_monomial(1)
    b = poly.coeff_monomial(E)
    if not (a.is_integer and b.is_integer):
        raise GradingError(f"{expr} has non-integral coefficients")
    return EpsCoeff(int(a), int(b))


def check_representation(g: ColorLieAlgebra, rep: Mapping[str, GradedMatrix]) -> CheckResult:
    """rho([X_a, X_b]) = rho(X_a) rho(X_b) - e(a, b) rho(X_b) rho(X_a) on all basis pairs."""
    count = 0
    blocks = next(iter(rep.values())).blocks
    for a, b in itertools.product(range(g.dim), repeat=2):
        count += 1
        x, y = rep[g.names[a]], rep[g.names[b]]
        if x.degree != g.degrees[a]:
            return CheckResult(
                name="representation",
                passed=False,
                instances=count,
                failure=f"rho({g.names[a]}) has degree {x.degree}",
            )
        expected = sympy.zeros(len(blocks), len(blocks))
        for rho, value in g.bracket(a, b).items():
            expected += rep[g.names[rho]].entries * (value.a + value.b * E)
        actual = graded_commutator(g.factor, x, y).entries
        if not (actual - expected).applyfunc(reduce_entry).is_zero_matrix:
            return CheckResult(
                name="representation",
                passed=False,
                instances=count,
                failure=_triple_name(g, (a, b)),
            )
    return CheckResult(name="representation", passed=True, instances=count)


def build_bilinear_form(
    g: ColorLieAlgebra,
    rep: Mapping[str, GradedMatrix],
    m: GradedMatrix | None = None,
    scale: sympy.Expr = E / 2,
) -> FormMatrix:
    """
    B_ab = scale * tr(rho(X_a) M rho(X_b)).

    Raises:
        MNotCentralError: if M does not graded-commute with every rho(X_a).
    """
    blocks = next(iter(rep.values())).blocks
    m = m if m is not None else GradedMatrix.identity(blocks)
    for name in g.names:
        if not graded_commutator(g.factor, m, rep[name]).is_zero():
            raise MNotCentralError(name)
    form = tuple(
        tuple(
            _expr_to_coeff(scale * graded_trace(rep[g.names[a]] @ m @ rep[g.names[b]]))
            for b in range(g.dim)
        )
        for a in range(g.dim)
    )
    logger.debug(f"bilinear form from representation: {form}")
    return form
