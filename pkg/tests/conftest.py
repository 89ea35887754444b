import random

import pytest

from oddsub.families import random_gnm


@pytest.fixture
def rng():
    return random.Random(20260101)


def random_graphs(count: int, n_lo: int, n_hi: int, seed: int):
    """Seeded G(n, m) graphs with a uniformly drawn edge count."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        m = rng.randint(0, n * (n - 1) // 2)
        out.append(random_gnm(n, m, rng.randrange(2**32)))
    return out
