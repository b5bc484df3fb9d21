"""
Verification suites run by ``colorweight verify``.

Every suite collects ``CheckResult``s into one ``VerificationReport``; identities that fail
are report content, never exceptions.
"""

from collections.abc import Callable, Iterable

from colorweight.colorlie import (
    a1_epsilon_representation,
    build_bilinear_form,
    check_casimir_conditions,
    check_color_axioms,
    check_form_symmetry,
    check_ftilde_contraction,
    check_representation,
    check_s_lie_axioms,
)
from colorweight.diagram import (
    ChordDiagram,
    DiagramSum,
    canonical_form,
    connected_sum,
    dn_diagram,
    enumerate_diagrams,
    four_term_quadruples,
)
from colorweight.envelope import UniversalEnvelope, all_words, confluence_words
from colorweight.jacobi import (
    JacobiDiagram,
    h_diagram,
    intermediate_diagram,
    tripod,
    vertex_flip,
    wheel,
)
from colorweight.poly import EPS, C, CenterPoly, Y
from colorweight.relations import TEN_RELATIONS, RelationTemplate, check_relation, lift
from colorweight.schemas import CheckResult, VerificationReport
from colorweight.utils import BaseSuite, Verboser
from colorweight.weights import (
    WeightSystem,
    closed_form_Dn,
    phi_map,
    s_map,
    theta_map,
)

JACOBI_VALUES: list[tuple[str, Callable[[], JacobiDiagram], CenterPoly]] = [
    ("tripod", tripod, EPS * Y),
    ("theta", lambda: wheel(2), EPS * Y * 2),
    ("H", h_diagram, Y),
    ("wheel3", lambda: wheel(3), Y),
    ("wheel4", lambda: wheel(4), Y**2 * 2),
    ("wheel5", lambda: wheel(5), EPS * Y**2 * 3 - Y),
    ("intermediate", intermediate_diagram, C * Y - EPS * Y * 2 + Y**2 * 2),
]


def _compare(
    name: str,
    cases: Iterable[tuple[str, CenterPoly, CenterPoly]],
    assertive: bool = True,
) -> CheckResult:
    """Count cases and describe the first one whose two values differ."""
    instances = 0
    failure = None
    for label, got, want in cases:
        instances += 1
        if got != want:
            failure = f"{label}: {got.render()} != {want.render()}"
            break
    return CheckResult(
        name=name, passed=failure is None, instances=instances, failure=failure, assertive=assertive
    )


def _diagrams(orders: Iterable[int]) -> Iterable[ChordDiagram]:
    for n in orders:
        yield from enumerate_diagrams(n)


class CachedOracle:
    """Oracle weights of chord diagrams, memoised by canonical form."""

    def __init__(self, envelope: UniversalEnvelope):
        self.envelope = envelope
        self._values: dict[ChordDiagram, CenterPoly] = {}

    def __call__(self, d: ChordDiagram) -> CenterPoly:
        key = canonical_form(d)
        if key not in self._values:
            self._values[key] = self.envelope.oracle_center_weight(key)
        return self._values[key]


# ============================================================================
# Suites
# ============================================================================


class AxiomsSuite(BaseSuite):
    """The algebraic identities of A1_e, its Casimir and its representation."""

    name = "axioms"

    def __init__(self, envelope: UniversalEnvelope | None = None, **kwargs):
        super().__init__(**kwargs)
        self.envelope = envelope or UniversalEnvelope()
        self.algebra = self.envelope.algebra
        self.checks = [
            ("commuting factor", self.check_commuting_factor),
            ("color axioms", self.check_color_axioms),
            ("s-lie", self.check_s_lie),
            ("casimir conditions", self.check_casimir_conditions),
            ("form", self.check_form),
            ("representation", self.check_representation),
            ("centrality", self.check_centrality),
        ]

    @Verboser(verbosity_level=1)
    def check_commuting_factor(self) -> CheckResult:
        return self.algebra.factor.check_identities()

    @Verboser(verbosity_level=1)
    def check_color_axioms(self) -> VerificationReport:
        return check_color_axioms(self.algebra)

    @Verboser(verbosity_level=1)
    def check_s_lie(self) -> VerificationReport:
        return check_s_lie_axioms(self.algebra)

    @Verboser(verbosity_level=1)
    def check_casimir_conditions(self) -> VerificationReport:
        return check_casimir_conditions(self.algebra)

    @Verboser(verbosity_level=1)
    def check_form(self) -> VerificationReport:
        return VerificationReport(
            suite=self.name,
            checks=[check_form_symmetry(self.algebra), check_ftilde_contraction(self.algebra)],
        )

    @Verboser(verbosity_level=1)
    def check_representation(self) -> VerificationReport:
        rep = a1_epsilon_representation()
        homomorphism = check_representation(self.algebra, rep)
        form = build_bilinear_form(self.algebra, rep)
        matches = form == self.algebra.form
        trace_form = CheckResult(
            name="trace form",
            passed=matches,
            instances=1,
            failure=None if matches else f"trace form {form} differs from {self.algebra.form}",
        )
        return VerificationReport(suite=self.name, checks=[homomorphism, trace_form])

    @Verboser(verbosity_level=2)
    def check_centrality(self) -> CheckResult:
        u = self.envelope
        central = {"Casimir": u.casimir_element(), "y": u.y_element()}
        failure = next((name for name, x in central.items() if not u.is_central(x)), None)
        return CheckResult(
            name="Casimir and y central",
            passed=failure is None,
            instances=len(central),
            failure=failure and f"{failure} does not commute with every generator",
        )


class FourTermSuite(BaseSuite):
    name = "4t"

    def __init__(self, system: WeightSystem | None = None, **kwargs):
        super().__init__(**kwargs)
        self.system = system or WeightSystem()
        self.checks = [("four-term", self.check_four_term)]

    @Verboser(verbosity_level=1)
    def check_four_term(self) -> CheckResult:
        def cases():
            for n in range(2, self.max_order + 1):
                for quadruple in four_term_quadruples(n):
                    combination = DiagramSum()
                    for d, sign in zip(quadruple.diagrams, quadruple.signs, strict=True):
                        combination = combination + DiagramSum.of(d, sign)
                    label = " ".join(str(d) for d in quadruple.diagrams)
                    yield label, self.system.weight_sum(combination), CenterPoly()

        return _compare("four-term relation", cases())


class StuSuite(BaseSuite):
    """Jacobi-diagram values through STU resolution."""

    name = "stu"

    def __init__(self, system: WeightSystem | None = None, **kwargs):
        super().__init__(**kwargs)
        self.system = system or WeightSystem()
        self.checks = [
            ("jacobi values", self.check_values),
            ("resolution order", self.check_resolution_order),
            ("chords as jacobi", self.check_chord_consistency),
            ("vertex antisymmetry", self.check_antisymmetry),
        ]

    @Verboser(verbosity_level=1)
    def check_values(self) -> CheckResult:
        return _compare(
            "jacobi values",
            ((name, self.system.weight_jacobi(build()), want) for name, build, want in JACOBI_VALUES),
        )

    @Verboser(verbosity_level=1)
    def check_resolution_order(self) -> CheckResult:
        return _compare(
            "resolution order",
            (
                (
                    name,
                    self.system.weight_jacobi(build(), "first"),
                    self.system.weight_jacobi(build(), "last"),
                )
                for name, build, _ in JACOBI_VALUES
            ),
        )

    @Verboser(verbosity_level=1)
    def check_chord_consistency(self) -> CheckResult:
        return _compare(
            "chord diagrams as jacobi diagrams",
            (
                (
                    str(d),
                    self.system.weight_jacobi(JacobiDiagram.from_chord(d)),
                    self.system.weight(d),
                )
                for d in _diagrams(range(1, self.max_order + 1))
            ),
        )

    @Verboser(verbosity_level=1)
    def check_antisymmetry(self) -> CheckResult:
        def cases():
            for name, build, _ in JACOBI_VALUES:
                j = build()
                for v in j.vertices:
                    yield (
                        f"{name} flipped at {v}",
                        self.system.weight_jacobi(vertex_flip(j, v)),
                        -self.system.weight_jacobi(j),
                    )

        return _compare("vertex antisymmetry", cases())


class CutSuite(BaseSuite):
    """Report-only scan for oracle values that depend on where the circle is cut."""

    name = "cut"

    def __init__(self, envelope: UniversalEnvelope | None = None, **kwargs):
        super().__init__(**kwargs)
        self.envelope = envelope or UniversalEnvelope()
        self.checks = [("cut dependence", self.scan)]

    @Verboser(verbosity_level=1)
    def scan(self) -> CheckResult:
        return self.envelope.scan_cut_dependence(self.max_order)


class DeframeSuite(BaseSuite):
    name = "deframe"

    def __init__(self, system: WeightSystem | None = None, **kwargs):
        super().__init__(**kwargs)
        self.system = system or WeightSystem()
        self.checks = [
            ("deframing", self.check_deframing),
            ("derivative", self.check_derivative),
            ("deframed recurrence", self.check_deframed_recurrence),
            ("projection", self.check_projection),
        ]

    @Verboser(verbosity_level=1)
    def check_deframing(self) -> CheckResult:
        return _compare(
            "weight of phi(D) is w(D) at c = 0",
            (
                (str(d), self.system.weight_sum(phi_map(d)), self.system.deframed_weight(d))
                for d in _diagrams(range(self.max_order + 1))
            ),
        )

    @Verboser(verbosity_level=1)
    def check_derivative(self) -> CheckResult:
        return _compare(
            "dw/dc = w(s(D))",
            (
                (str(d), self.system.weight(d).d_dc(), self.system.weight_sum(s_map(d)))
                for d in _diagrams(range(self.max_order + 1))
            ),
        )

    @Verboser(verbosity_level=1)
    def check_deframed_recurrence(self) -> CheckResult:
        return _compare(
            "deframed recurrence",
            (
                (str(d), self.system.deframed_recurrence(d), self.system.deframed_weight(d))
                for d in _diagrams(range(self.max_order + 1))
            ),
        )

    @Verboser(verbosity_level=1)
    def check_projection(self) -> CheckResult:
        def cases():
            for d in _diagrams(range(self.max_order + 1)):
                phi = phi_map(d)
                yield f"s(phi({d}))", self.system.weight_sum(phi.apply(s_map)), CenterPoly()
                yield (
                    f"phi(phi({d}))",
                    self.system.weight_sum(phi.apply(phi_map)),
                    self.system.weight_sum(phi),
                )

        return _compare("phi is a projection killed by s", cases())


class PropsSuite(BaseSuite):
    """Structural properties of the recurrence and the relations specific to A1_e."""

    name = "props"

    def __init__(self, system: WeightSystem | None = None, max_spectators: int = 2, **kwargs):
        super().__init__(**kwargs)
        self.system = system or WeightSystem()
        self.max_spectators = max_spectators
        self.checks = [
            ("isolated chord", self.check_isolated_chord),
            ("multiplicativity", self.check_multiplicativity),
            ("pivot independence", self.check_pivot_independence),
            ("closed forms", self.check_closed_forms),
            ("teeth", self.check_teeth),
            ("local relations", self.check_local_relations),
        ]

    @Verboser(verbosity_level=1)
    def check_isolated_chord(self) -> CheckResult:
        return _compare(
            "isolated chord factor",
            (
                (str(d), self.system.weight(theta_map(d)), C * self.system.weight(d))
                for d in _diagrams(range(self.max_order + 1))
            ),
        )

    @Verboser(verbosity_level=1)
    def check_multiplicativity(self) -> CheckResult:
        def cases():
            top = min(self.max_order, 3)
            for d1 in _diagrams(range(1, top + 1)):
                for d2 in _diagrams(range(1, top + 1)):
                    yield (
                        f"{d1} # {d2}",
                        self.system.weight(connected_sum(d1, d2)),
                        self.system.weight(d1) * self.system.weight(d2),
                    )

        result = _compare("connected sum multiplicativity", cases(), assertive=False)
        if not result.passed:
            self.logger.warning(f"weight is not multiplicative: {result.failure}")
        return result

    @Verboser(verbosity_level=1)
    def check_pivot_independence(self) -> CheckResult:
        def cases():
            for d in _diagrams(range(1, self.max_order + 1)):
                reference = self.system.weight(d)
                for a in d.chords():
                    yield f"{d} pivot {a}", self.system.weight_recurrence(d, pivot=a), reference

        return _compare("pivot independence", cases())

    @Verboser(verbosity_level=1)
    def check_closed_forms(self) -> CheckResult:
        return _compare(
            "w(D_n) closed form",
            (
                (f"D_{n}", self.system.weight(dn_diagram(n)), closed_form_Dn(n))
                for n in range(2 * self.max_order + 1)
            ),
        )

    @Verboser(verbosity_level=1)
    def check_teeth(self) -> CheckResult:
        return self.system.hige_checks(self.max_order + 2)

    @Verboser(verbosity_level=1)
    def check_local_relations(self) -> VerificationReport:
        return self.system.prop_reduction_checks(self.max_spectators)


class OracleSuite(BaseSuite):
    """The recurrence against brute-force evaluation in the enveloping algebra."""

    name = "oracle"

    def __init__(
        self,
        system: WeightSystem | None = None,
        envelope: UniversalEnvelope | None = None,
        word_length: int = 4,
        **kwargs,
    ):
        super().__init__(**kwargs)
        self.system = system or WeightSystem()
        self.envelope = envelope or UniversalEnvelope()
        self.word_length = word_length
        self.checks = [
            ("normal ordering", self.check_normal_ordering),
            ("recurrence vs oracle", self.check_oracle),
        ]

    @Verboser(verbosity_level=1)
    def check_normal_ordering(self) -> CheckResult:
        u = self.envelope
        words = list(all_words(self.word_length - 1, u.dim))
        words += confluence_words(200, 2 * self.word_length, u.dim)
        instances = 0
        failure = None
        for word in words:
            instances += 1
            reference = u.normal_order(word)
            for strategy in ("leftmost", "rightmost"):
                if u.normal_order(word, strategy) != reference:
                    failure = f"{strategy} rewriting of {list(word)}"
                    break
            if failure:
                break
        return CheckResult(
            name="normal ordering confluence",
            passed=failure is None,
            instances=instances,
            failure=failure,
        )

    @Verboser(verbosity_level=1)
    def check_oracle(self) -> CheckResult:
        oracle = CachedOracle(self.envelope)
        return _compare(
            "recurrence equals oracle",
            (
                (str(d), self.system.weight(d), oracle(d))
                for d in _diagrams(range(self.max_order + 1))
            ),
        )


class TenRelSuite(BaseSuite):
    """Four-chord local identities in spectator contexts."""

    name = "tenrel"

    def __init__(
        self,
        system: WeightSystem | None = None,
        envelope: UniversalEnvelope | None = None,
        max_spectators: int = 2,
        evaluator: str = "oracle",
        **kwargs,
    ):
        super().__init__(**kwargs)
        self.system = system or WeightSystem()
        self.envelope = envelope or UniversalEnvelope()
        self.max_spectators = max_spectators
        self.evaluator = evaluator
        self.checks = [(template.name, self._checker(template)) for template in TEN_RELATIONS]

    def _checker(self, template: RelationTemplate) -> Callable[[], CheckResult]:
        return lambda: self.check_template(template)

    @Verboser(verbosity_level=1)
    def check_template(self, template: RelationTemplate) -> CheckResult:
        chord_weight = (
            CachedOracle(self.envelope) if self.evaluator == "oracle" else self.system.weight
        )
        return check_relation(template, lift(chord_weight), self.max_spectators)


class ReflectSuite(BaseSuite):
    """Report-only comparison of mirror-image weights."""

    name = "reflect"

    def __init__(self, system: WeightSystem | None = None, **kwargs):
        super().__init__(**kwargs)
        self.system = system or WeightSystem()
        self.checks = [("reflection", self.check_reflection)]

    @Verboser(verbosity_level=1)
    def check_reflection(self) -> CheckResult:
        return self.system.reflection_report(self.max_order)


SUITES: dict[str, type[BaseSuite]] = {
    suite.name: suite
    for suite in (
        AxiomsSuite,
        FourTermSuite,
        StuSuite,
        CutSuite,
        DeframeSuite,
        PropsSuite,
        OracleSuite,
        TenRelSuite,
        ReflectSuite,
    )
}


def run_suite(name: str, max_order: int = 4, **params) -> VerificationReport:
    """Build the named suite, apply ``params`` and run it."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    suite = SUITES[name](max_order=max_order)
    suite.set_params(**params)
    return suite()
