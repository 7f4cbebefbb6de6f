import numpy as np
import pytest

# Single fixed seed so every randomized property in the suite is reproducible.
RNG_SEED = 20260810


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(RNG_SEED)


def make_random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Seeded orthonormalisation of a random complex matrix (QR with the
    R-diagonal phases folded back in, so the distribution is not QR-biased)."""
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(m)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


@pytest.fixture
def random_unitary():
    return make_random_unitary
