"""Shared fixtures: named graphs and cached enumeration corpora."""

from __future__ import annotations

import pytest

from proxrem import Graph, basic_generator, from_edge_list
from proxrem.search import enumerate_connected


def make_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return make_petersen()


@pytest.fixture(scope="session")
def k4() -> Graph:
    return basic_generator("complete", 4)


@pytest.fixture(scope="session")
def c5() -> Graph:
    return basic_generator("cycle", 5)


@pytest.fixture(scope="session")
def p5() -> Graph:
    return basic_generator("path", 5)


@pytest.fixture(scope="session")
def k33() -> Graph:
    return from_edge_list(6, [(i, 3 + j) for i in range(3) for j in range(3)])


@pytest.fixture(scope="session")
def k23() -> Graph:
    # parts {0, 1} (degree 3) and {2, 3, 4} (degree 2)
    return from_edge_list(5, [(i, j) for i in range(2) for j in range(2, 5)])


@pytest.fixture(scope="session")
def connected_upto_6() -> dict[int, list[Graph]]:
    return {n: list(enumerate_connected(n)) for n in range(2, 7)}


@pytest.fixture(scope="session")
def connected_7() -> list[Graph]:
    return list(enumerate_connected(7))
