import pathlib
import random

import pytest

from domguard.graph import Graph
from domguard.graph6 import parse_edge_list, parse_graph6_lines

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fig1_tree() -> Graph:
    """The 6-vertex tree with a degree-3 vertex: edges 0-1,1-2,2-3,0-4,0-5."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5)])


@pytest.fixture(scope="session")
def spider9() -> Graph:
    """Center 0 with five leaves and a length-3 tail 0-1-2-3."""
    return Graph(9, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8)])


@pytest.fixture(scope="session")
def fig2_left() -> Graph:
    return parse_edge_list((FIXTURES / "fig2_left.edges").read_text())


@pytest.fixture(scope="session")
def fig2_right() -> Graph:
    return parse_edge_list((FIXTURES / "fig2_right.edges").read_text())


@pytest.fixture(scope="session")
def corpus_all_n6() -> list[Graph]:
    return parse_graph6_lines((FIXTURES / "all_graphs_n1_to_6.g6").read_text())


@pytest.fixture(scope="session")
def corpus_connected_n7() -> list[Graph]:
    return parse_graph6_lines((FIXTURES / "connected_n1_to_7.g6").read_text())


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.25) -> Graph:
    tree = random_tree(rng, n)
    edges = list(tree.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if not tree.has_edge(u, v) and rng.random() < extra:
                edges.append((u, v))
    return Graph(n, edges)
