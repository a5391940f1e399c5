import random
from typing import List, Sequence

import networkx as nx
import pytest

from consensus_bounds.containers import Container
from consensus_bounds.entities import Network
from consensus_bounds.generators import GraphGenerator
from consensus_bounds.graph import from_networkx, validate

WORKED_VECTORS = [(0, 3), (1, 2), (1, 3), (2, 1), (2, 2), (3, 0)]


def path(n: int, leaders: Sequence[int] = (0,)) -> Network:
    return from_networkx(nx.path_graph(n), leaders)


def cycle(n: int, leaders: Sequence[int] = (0,)) -> Network:
    return from_networkx(nx.cycle_graph(n), leaders)


def star(n: int, leaders: Sequence[int] = (0,)) -> Network:
    """``n`` nodes, center 0."""
    return from_networkx(nx.star_graph(n - 1), leaders)


def complete(n: int, leaders: Sequence[int] = (0,)) -> Network:
    return from_networkx(nx.complete_graph(n), leaders)


def random_networks(count: int, seed: int, max_n: int = 10, max_leaders: int = 3,
                    p_range=(0.25, 0.75)) -> List[Network]:
    """Seeded corpus of connected graphs with 2..max_n nodes and randomly placed leaders."""
    rng = random.Random(seed)
    generator = GraphGenerator(max_attempts=200)
    corpus = []
    for index in range(count):
        n = rng.randint(2, max_n)
        m = rng.randint(1, min(max_leaders, n))
        corpus.append(generator.generate("random", n, p=rng.uniform(*p_range), seed=seed * 10_000 + index * 300,
                                         random_leaders=m))
    return corpus


def random_vector_sets(count: int, seed: int, max_size: int = 8, max_coord: int = 4):
    rng = random.Random(seed)
    for _ in range(count):
        m = rng.randint(1, 3)
        size = rng.randint(1, max_size)
        vectors = {tuple(rng.randint(0, max_coord) for _ in range(m)) for _ in range(size)}
        yield m, sorted(vectors)


@pytest.fixture
def p2():
    return validate(2, [(0, 1)], [0])


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4_two_leaders():
    return path(4, leaders=(0, 3))


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def s4():
    return star(4)


@pytest.fixture(scope="module")
def graph_corpus():
    return random_networks(200, seed=3)


@pytest.fixture(scope="module")
def vector_corpus():
    return list(random_vector_sets(500, seed=11))


@pytest.fixture
def container():
    container = Container()
    yield container
    container.unwire()
