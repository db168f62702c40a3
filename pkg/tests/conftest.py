"""Pytest configuration and shared fixtures.

This file is automatically loaded by pytest and provides fixtures
that can be used across all test files.
"""

import pytest

from src.operations.field_ops import field_spec
from src.operations.generator_ops import boundary_simplex, load_fixture, octahedron


@pytest.fixture(autouse=True)
def mock_env_vars(monkeypatch):
    """Set environment variables for all tests.

    This fixture runs automatically for all tests (autouse=True)
    to ensure a consistent test environment.
    """
    monkeypatch.setenv("DEFAULT_FIELD", "2")
    monkeypatch.setenv("DEFAULT_SEED", "0")
    monkeypatch.setenv("VALIDATION_FIELD", "2")


@pytest.fixture
def gf2():
    return field_spec(2)


@pytest.fixture
def gf3():
    return field_spec(3)


@pytest.fixture
def gf5():
    return field_spec(5)


@pytest.fixture
def gf65537():
    """Prime field large enough for generic linear forms."""
    return field_spec(65537)


@pytest.fixture
def gf2_16():
    """GF(2^16), the characteristic-two field used for face-ring checks."""
    return field_spec(2, 16)


@pytest.fixture
def torus():
    """7-vertex torus."""
    return load_fixture("torus_7")


@pytest.fixture
def rp2():
    """6-vertex real projective plane."""
    return load_fixture("rp2_6")


@pytest.fixture
def mobius():
    """5-vertex Möbius band."""
    return load_fixture("mobius_5")


@pytest.fixture
def cp2():
    """9-vertex complex projective plane."""
    return load_fixture("cp2_9")


@pytest.fixture
def tetrahedron_boundary():
    """Boundary of the 3-simplex (a 2-sphere on 4 vertices)."""
    return boundary_simplex(3)


@pytest.fixture
def octahedron_boundary():
    return octahedron()
