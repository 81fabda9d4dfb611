from __future__ import annotations

from pathlib import Path

import pytest

from pototal.diagram import Diagram, single_block, to_graph
from pototal.graph import Graph

DATA = Path(__file__).parent / "data"

K4_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]
C4_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3)]
# K_{2,3} with parts {0, 2} and {1, 3, 4}, drawn on the boundary 0 1 2 3 4.
K23_BOUNDARY = (0, 1, 2, 3, 4)
K23_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)]


def k4() -> Diagram:
    return single_block(range(4), K4_EDGES)


def c4() -> Diagram:
    return single_block(range(4), C4_EDGES)


def k23() -> Diagram:
    return single_block(K23_BOUNDARY, K23_EDGES)


def graph(edges, n: int | None = None) -> Graph:
    n = n if n is not None else 1 + max(max(e) for e in edges)
    return Graph.from_edges(range(n), edges)


@pytest.fixture
def k4_graph() -> Graph:
    return to_graph(k4())


@pytest.fixture
def c4_graph() -> Graph:
    return to_graph(c4())


@pytest.fixture
def k23_graph() -> Graph:
    return to_graph(k23())
