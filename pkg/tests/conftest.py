"""Shared fixtures and dense-matrix helpers for the test suite."""

import numpy as np
import pytest

from sfenc.spectra import pauli_matrix


def assert_matrix_equal(a: np.ndarray, b: np.ndarray, tol: float = 0.0) -> None:
    assert a.shape == b.shape
    dev = np.max(np.abs(a - b)) if a.size else 0.0
    assert dev <= tol, f"matrices differ by {dev}"


def same_operator(p, q) -> bool:
    """Dense-matrix equality of two Pauli values; the independent oracle."""
    return bool(np.array_equal(pauli_matrix(p), pauli_matrix(q)))


@pytest.fixture
def rng():
    import random

    return random.Random(20240811)
