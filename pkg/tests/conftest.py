import numpy as np
import pytest

from paircomp import Mode, PcMatrix, POSITIVE_REALS


def random_weights(rng: np.random.Generator, n: int) -> np.ndarray:
    """Log-uniform positive weights in [1e-3, 1e3]."""
    return 10.0 ** rng.uniform(-3.0, 3.0, size=n)


def consistent_matrix(rng: np.random.Generator, n: int) -> PcMatrix:
    """A random consistent strict matrix, built directly from ratios."""
    w = random_weights(rng, n)
    entries = np.outer(w, 1.0 / w)
    return PcMatrix.from_entries(entries, POSITIVE_REALS, Mode.STRICT)


def perturbed_matrix(rng: np.random.Generator, n: int) -> PcMatrix:
    """A consistent matrix with one reciprocal pair scaled by [1.01, 2]."""
    m = consistent_matrix(rng, n)
    entries = np.array(m.entries)
    i = int(rng.integers(0, n - 1))
    j = int(rng.integers(i + 1, n))
    factor = rng.uniform(1.01, 2.0)
    entries[i, j] *= factor
    entries[j, i] = 1.0 / entries[i, j]
    return PcMatrix.from_entries(entries, POSITIVE_REALS, Mode.STRICT)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
