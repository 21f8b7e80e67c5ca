import numpy as np
import pytest

from divbound.simplex import sample_pair_matrix, validate

SIZES = (2, 3, 5, 10)


def scaled_ok(a, b, tol):
    """|a - b| <= tol * max(1, |a|, |b|), elementwise.

    The same scaling the sandwich slack uses: relative for large values,
    absolute below 1.  A purely relative comparison is unattainable for
    near-identical pairs, where both sides cancel to the rounding floor.
    """
    a, b = np.asarray(a, float), np.asarray(b, float)
    return bool(
        np.all(np.abs(a - b) <= tol * np.maximum(1.0, np.maximum(np.abs(a), np.abs(b))))
    )


@pytest.fixture
def fixed_pair():
    """The worked example pair used throughout: P = (1/2, 1/2), Q = (1/4, 3/4)."""
    return validate([0.5, 0.5]), validate([0.25, 0.75])


@pytest.fixture(scope="session")
def pair_matrices():
    """Moderate random-pair batches per simplex size, for unit-level sweeps."""
    return {n: sample_pair_matrix(n, 300, seed=9100 + n) for n in SIZES}
