from pathlib import Path

import pytest

from hedgecut import HedgeGraph, build_graph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="ascii")


@pytest.fixture
def c4alt() -> HedgeGraph:
    # 4-cycle with alternating labels; hedge a = two opposite edges
    return build_graph(4, [(0, 1, "a"), (1, 2, "b"), (2, 3, "a"), (3, 0, "b")])


@pytest.fixture
def triangle() -> HedgeGraph:
    return build_graph(3, [(0, 1, "a"), (1, 2, "b"), (2, 0, "c")])


@pytest.fixture
def p3() -> HedgeGraph:
    return build_graph(3, [(0, 1, "a"), (1, 2, "b")])


@pytest.fixture
def spider() -> HedgeGraph:
    # center 0, three b-spokes, pendant a_k legs; d_A(b)=3 but 2 colors suffice
    return build_graph(7, [(0, 1, "b"), (0, 2, "b"), (0, 3, "b"),
                           (1, 4, "a1"), (2, 5, "a2"), (3, 6, "a3")])


@pytest.fixture
def twoi() -> HedgeGraph:
    # label i occurs on two edges at vertex 0
    return build_graph(5, [(0, 1, "i"), (0, 2, "i"), (0, 3, "a"), (1, 4, "b")])


@pytest.fixture
def pendants() -> HedgeGraph:
    # i-path 0-1-2 with one pendant per path vertex
    return build_graph(6, [(0, 1, "i"), (1, 2, "i"), (0, 3, "a"), (1, 4, "b"), (2, 5, "c")])


@pytest.fixture
def single_label_path() -> HedgeGraph:
    return build_graph(4, [(0, 1, "s"), (1, 2, "s"), (2, 3, "s")])
