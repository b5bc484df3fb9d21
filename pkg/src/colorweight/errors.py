"""
Exception hierarchy for colorweight.

Every error derives from ``ColorWeightError`` which is itself a ``ValueError``, so callers
that only care about bad input can keep catching ``ValueError``.
"""


class ColorWeightError(ValueError):
    """Base class for all colorweight errors."""


# ============================================================================
# Diagram input
# ============================================================================


class LabelCountError(ColorWeightError):
    """A chord label does not appear exactly twice."""

    def __init__(self, label: str, count: int):
        self.label = label
        self.count = count
        super().__init__(f"label {label!r} appears {count} times, expected exactly 2")


class JacobiValidationError(ColorWeightError):
    """A Jacobi diagram description is malformed; ``endpoint`` names the culprit."""

    def __init__(self, message: str, endpoint: str | None = None):
        self.endpoint = endpoint
        if endpoint is not None:
            message = f"{message} (endpoint {endpoint})"
        super().__init__(message)


class DisconnectedInternalError(ColorWeightError):
    """An internal component of a Jacobi diagram has no leg on the circle."""


class NotCrossingError(ColorWeightError):
    """A chord passed to a recurrence surgery does not cross the pivot."""


# ============================================================================
# Algebra
# ============================================================================


class GradingError(ColorWeightError):
    """Matrix entries or structure constants are incompatible with the grading."""


class DegenerateFormError(ColorWeightError):
    """The bilinear form is missing or has zero determinant for some value of e."""


class MNotCentralError(ColorWeightError):
    """The matrix used to build a bilinear form does not graded-commute with a generator."""

    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"matrix M does not graded-commute with rho({generator})")


# ============================================================================
# Center extraction and weights
# ============================================================================


class NotCentralError(ColorWeightError):
    """An envelope element was expected to be central but is not."""


class NotInSpanError(ColorWeightError):
    """A central element is not a polynomial in c and y of the requested order."""


class NonIntegralResultError(ColorWeightError):
    """A rational combination did not collapse to Z[e]/(e^2-1) coefficients."""


class ComplexityGuardError(ColorWeightError):
    """The requested computation exceeds the supported size for the chosen method."""
