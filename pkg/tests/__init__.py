"""
colorweight Test Suite

This package contains unit and integration tests for the colorweight package.

Test Structure:
- test_poly.py: Tests for EpsCoeff and CenterPoly arithmetic and rendering
- test_diagram.py / test_jacobi.py: Tests for chord and Jacobi diagrams
- test_colorlie.py / test_envelope.py: Tests for the algebra, normal ordering and the oracle
- test_weights.py / test_relations.py: Tests for the recurrence, deframing and local relations
- test_cache.py, test_schemas.py, test_utils.py: Tests for the ambient layers
- test_suites.py / test_cli.py: Tests for verification suites and the command line
- conftest.py: Shared fixtures and test configuration
"""
