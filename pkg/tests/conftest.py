import random

import pytest

from polytoric import Polymatroid
from polytoric.sampling import random_polymatroid


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def small_random_polymatroids(rng):
    """A reproducible batch of valid random polymatroids with n in 2..4."""
    return [
        random_polymatroid(rng.randint(2, 4), rng, max_unit_rank=3)
        for _ in range(25)
    ]


@pytest.fixture
def simplex_on_2() -> Polymatroid:
    return Polymatroid.veronese((1, 1), 1)
