import random
from itertools import combinations

import pytest

from necgraph.constructions import GroupSpec, cayley_table, petersen, symplectic_graph
from necgraph.geometry import latin_square_to_net, point_graph
from necgraph.graph import Graph


def brute_srg(g: Graph):
    """Strongly regular parameters by plain counting over an adjacency matrix."""
    v = g.order
    adj = [[g.adjacent(x, y) for y in range(v)] for x in range(v)]
    degrees = {sum(row) for row in adj}
    if len(degrees) != 1:
        return None
    lam, mu = set(), set()
    for x, y in combinations(range(v), 2):
        common = sum(1 for z in range(v) if adj[x][z] and adj[y][z])
        (lam if adj[x][y] else mu).add(common)
    if len(lam) > 1 or len(mu) > 1 or not lam or not mu:
        return None
    return v, degrees.pop(), lam.pop(), mu.pop()


def random_graph(rng, v, p=0.5):
    return Graph.from_relation(v, lambda x, y: rng.random() < p)


@pytest.fixture(scope="session")
def z2_3_net():
    return point_graph(latin_square_to_net(cayley_table(GroupSpec.parse("z2^3"))))


@pytest.fixture(scope="session")
def sp4():
    return symplectic_graph(2)


@pytest.fixture(scope="session")
def sp6():
    return symplectic_graph(3)


@pytest.fixture(scope="session")
def pet():
    return petersen()


@pytest.fixture
def rng():
    return random.Random(12345)
