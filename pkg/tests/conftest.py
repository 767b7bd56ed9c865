import random
from fractions import Fraction

import pytest
from hypothesis import settings

from balanced.graph import Graph

settings.register_profile("default", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("default")


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def random_diameter_two_graph(rng: random.Random, n: int) -> Graph:
    """Non-complete connected graph of diameter exactly 2."""
    while True:
        g = random_connected_graph(rng, n, p=0.5)
        if g.diameter == 2:
            return g


def random_weights(rng: random.Random, k: int) -> list[Fraction]:
    raw = [rng.randint(1, 9) for _ in range(k)]
    total = sum(raw)
    return [Fraction(r, total) for r in raw]


@pytest.fixture
def rng():
    return random.Random(20261016)
