"""
Shared pytest fixtures and configuration for colorweight tests.

This module provides common fixtures that can be used across all test files.
"""

import json
from pathlib import Path
from typing import Any

import pytest

from colorweight.cache import WeightCache
from colorweight.colorlie import ColorLieAlgebra, a1_epsilon
from colorweight.envelope import UniversalEnvelope
from colorweight.poly import EPS, C, CenterPoly, Y
from colorweight.weights import WeightSystem

FIXTURES = Path(__file__).parent / "fixtures"

# ============================================================================
# Algebra Fixtures
# ============================================================================


@pytest.fixture
def algebra() -> ColorLieAlgebra:
    """The algebra A1_e with its standard form diag(1, e, 1, 1)."""
    return a1_epsilon()


@pytest.fixture(scope="session")
def envelope() -> UniversalEnvelope:
    """One enveloping algebra per session; its product memo is expensive to rebuild."""
    return UniversalEnvelope()


# ============================================================================
# Weight System Fixtures
# ============================================================================


@pytest.fixture
def system() -> WeightSystem:
    """A weight system with a private, uncapped-in-practice cache."""
    return WeightSystem(cache=WeightCache(max_bytes=64 * 1024 * 1024))


@pytest.fixture(scope="session")
def shared_system() -> WeightSystem:
    """A weight system reused by the exhaustive sweeps."""
    return WeightSystem(cache=WeightCache(max_bytes=256 * 1024 * 1024))


# ============================================================================
# Golden Values
# ============================================================================


@pytest.fixture
def chord_table() -> dict[str, CenterPoly]:
    """Known weights of chord diagrams of orders 1 to 4."""
    return {
        "": CenterPoly.constant(1),
        "1 1": C,
        "1 1 2 2": C**2,
        "1 2 1 2": C**2 - EPS * Y,
        "1 1 2 2 3 3": C**3,
        "1 1 2 3 2 3": C**3 - EPS * C * Y,
        "1 2 1 3 2 3": C**3 - EPS * C * Y * 2 + Y,
        "1 2 3 1 2 3": C**3 - EPS * C * Y * 3 + Y * 2,
        "1 2 3 4 1 4 3 2": C**4 - EPS * C**2 * Y * 3 + C * Y * 3 - EPS * Y,
        "1 2 1 3 2 4 3 4": C**4 - EPS * C**2 * Y * 3 + C * Y * 2 - EPS * Y + Y**2,
        "1 2 3 1 4 2 4 3": C**4 - EPS * C**2 * Y * 4 + C * Y * 4 - EPS * Y * 2 + Y**2,
        "1 2 3 1 4 3 2 4": C**4 - EPS * C**2 * Y * 4 + C * Y * 4 - EPS * Y * 4 + Y**2 * 4,
        "1 2 3 4 1 3 2 4": C**4 - EPS * C**2 * Y * 5 + C * Y * 6 - EPS * Y * 5 + Y**2 * 4,
        "1 2 3 4 1 2 3 4": C**4 - EPS * C**2 * Y * 6 + C * Y * 8 - EPS * Y * 7 + Y**2 * 5,
    }


# ============================================================================
# JSON Fixtures
# ============================================================================


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def load_fixture():
    """Load a JSON fixture by file name."""

    def load(name: str) -> dict[str, Any]:
        return json.loads((FIXTURES / name).read_text())

    return load
