import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from netdual.core import GroundSet, minimalize

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def squarefree_ideals(draw, max_vars=8, max_gens=6, min_vars=1):
    n = draw(st.integers(min_vars, max_vars))
    full = (1 << n) - 1
    gens = draw(st.lists(st.integers(1, full), min_size=1, max_size=max_gens))
    return minimalize(GroundSet(n), gens)


def random_ideal(rng: random.Random, n: int, max_gens: int = 6, max_degree: int | None = None):
    full = (1 << n) - 1
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        if max_degree is None:
            g = rng.randint(1, full)
        else:
            size = rng.randint(1, min(max_degree, n))
            g = sum(1 << i for i in rng.sample(range(n), size))
        gens.append(g)
    return minimalize(GroundSet(n), gens)


@pytest.fixture
def rng():
    return random.Random(20240611)
