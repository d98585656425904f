import pytest

from misnet.graphs import DiGraph, family


@pytest.fixture
def p3() -> DiGraph:
    # a-b-c with a=0, b=1, c=2, as in the three-vertex path example
    return DiGraph.graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4() -> DiGraph:
    return family("path", 4)


@pytest.fixture
def c3() -> DiGraph:
    return family("cycle", 3)


@pytest.fixture
def c4() -> DiGraph:
    return family("cycle", 4)


@pytest.fixture
def k1() -> DiGraph:
    return family("complete", 1)


@pytest.fixture
def dc3() -> DiGraph:
    return family("directed_cycle", 3)
