import os
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

CACHE_BYTES_ENV = "COLORWEIGHT_CACHE_BYTES"
DEFAULT_CACHE_BYTES = 64 * 1024 * 1024

# ============================================================================
# Polynomial JSON
# ============================================================================


class CenterPolyTerm(BaseModel):
    """One term a + b*e times c^c y^y."""

    model_config = ConfigDict(extra="forbid")

    c: int = Field(ge=0, description="Exponent of the Casimir variable c")
    y: int = Field(ge=0, description="Exponent of y = c - H^2")
    a: int = Field(description="Integer part of the coefficient")
    b: int = Field(description="Coefficient of e")


class CenterPolyJSON(BaseModel):
    terms: list[CenterPolyTerm] = Field(default_factory=list)


# ============================================================================
# Jacobi diagram JSON
# ============================================================================


class CircleEndpoint(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    circle: int = Field(ge=0, description="Leg position on the circle, counterclockwise")


class VertexEndpoint(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    vertex: str
    slot: int = Field(ge=0, le=2, description="Counterclockwise slot index at the vertex")


Endpoint = CircleEndpoint | VertexEndpoint


class JacobiVertex(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str


class JacobiSpec(BaseModel):
    """Wire form of a Jacobi diagram: ``{"legs": L, "vertices": [...], "edges": [[end, end], ...]}``."""

    model_config = ConfigDict(extra="forbid")

    legs: int = Field(ge=0)
    vertices: list[JacobiVertex] = Field(default_factory=list)
    edges: list[tuple[Endpoint, Endpoint]] = Field(default_factory=list)


# ============================================================================
# Algebra JSON
# ============================================================================

Coefficient = int | tuple[int, int]


class BasisSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    degree: tuple[int, int]

    @field_validator("degree")
    @classmethod
    def _degree_in_z2(cls, value: tuple[int, int]) -> tuple[int, int]:
        if any(d not in (0, 1) for d in value):
            raise ValueError(f"degree components must be 0 or 1, got {value}")
        return value


class AlgebraSpec(BaseModel):
    """
    Description of a small color Lie algebra for test fixtures.

    ``structure_constants`` entries are ``[mu, nu, rho, coeff]`` meaning f_{mu nu}^rho = coeff,
    where ``coeff`` is an integer or a pair ``[a, b]`` for a + b*e.
    """

    model_config = ConfigDict(extra="forbid")

    basis: list[BasisSpec]
    structure_constants: list[tuple[int, int, int, Coefficient]] = Field(default_factory=list)
    form: list[list[Coefficient]] | None = None
    factor: Literal["graded_lie", "graded_superlie"] = "graded_lie"

    @model_validator(mode="after")
    def _indices_in_range(self) -> "AlgebraSpec":
        size = len(self.basis)
        for mu, nu, rho, _ in self.structure_constants:
            if not all(0 <= index < size for index in (mu, nu, rho)):
                raise ValueError(f"structure constant index out of range: {(mu, nu, rho)}")
        if self.form is not None and (
            len(self.form) != size or any(len(row) != size for row in self.form)
        ):
            raise ValueError(f"form must be a {size}x{size} matrix")
        return self


# ============================================================================
# Verification reports
# ============================================================================


class CheckResult(BaseModel):
    """Outcome of one identity checked over a family of instances."""

    name: str
    passed: bool
    instances: int = 0
    failure: str | None = Field(default=None, description="First violating instance, if any")
    assertive: bool = Field(default=True, description="Report-only checks never fail a suite")
    notes: list[str] = Field(default_factory=list)


class VerificationReport(BaseModel):
    suite: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if check.assertive)


# ============================================================================
# Configuration
# ============================================================================


class CacheSettings(BaseModel):
    max_bytes: int = Field(default=DEFAULT_CACHE_BYTES, ge=0)

    @classmethod
    def from_env(cls) -> "CacheSettings":
        raw = os.environ.get(CACHE_BYTES_ENV)
        if raw is None or not raw.strip():
            return cls()
        return cls(max_bytes=raw.strip())


class RunConfig(BaseModel):
    """All options of one CLI invocation."""

    model_config = ConfigDict(extra="forbid")

    command: Literal["weight", "jacobi", "table", "verify"]
    diagram: str | None = None
    file: Path | None = None
    epsilon: Literal["sym", "+1", "-1"] = "sym"
    method: Literal["recurrence", "oracle", "both"] = "recurrence"
    deframed: bool = False
    format: Literal["text", "json"] = "text"
    max_order: int = Field(default=4, ge=0, le=8)
    cut: int = Field(default=0, ge=0)
    order: int | None = Field(default=None, ge=1, le=6)
    indecomposable: bool = False
    rotations_only: bool = False
    suite: (
        Literal["axioms", "4t", "stu", "cut", "deframe", "props", "oracle", "tenrel", "reflect"]
        | None
    ) = None
    dump_stu: bool = False
    verbose: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _command_inputs(self) -> "RunConfig":
        if self.command in ("weight", "jacobi") and self.diagram is None and self.file is None:
            raise ValueError(f"'{self.command}' needs --diagram or --file")
        if self.command == "table" and self.order is None:
            raise ValueError("'table' needs an order")
        if self.command == "verify" and self.suite is None:
            raise ValueError("'verify' needs a suite name")
        return self

    @property
    def eps_value(self) -> int | None:
        return {"sym": None, "+1": 1, "-1": -1}[self.epsilon]
