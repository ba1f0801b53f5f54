"""Pytest configuration and shared fixtures."""

import os

import networkx as nx
import pytest

from cutpoly.graph.multigraph import Multigraph
from cutpoly.limits import set_limits


def pytest_addoption(parser):
    parser.addoption(
        "--extended",
        action="store_true",
        default=False,
        help="run long exact checks (K5 gaps, K5 Hilbert basis, seminormality)",
    )


def pytest_collection_modifyitems(config, items):
    """Automatically skip extended tests unless they were asked for."""
    if config.getoption("--extended") or os.getenv("CUTPOLY_EXTENDED") == "1":
        return
    skip_extended = pytest.mark.skip(
        reason="Extended profile: pass --extended or set CUTPOLY_EXTENDED=1"
    )
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip_extended)


@pytest.fixture(autouse=True)
def reset_limits():
    """Every test starts from the environment's limits."""
    set_limits(None)
    yield
    set_limits(None)


def complete(n: int) -> Multigraph:
    return Multigraph.from_networkx(nx.complete_graph(n))


def cycle(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def path3():
    """Path 0-1-2."""
    return Multigraph.from_pairs(3, [(0, 1), (1, 2)])


@pytest.fixture
def petersen():
    return Multigraph.from_networkx(nx.petersen_graph())


@pytest.fixture
def grid():
    """3x3 grid."""
    return Multigraph.from_networkx(nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 3)))


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 0."""
    return Multigraph.from_pairs(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


@pytest.fixture
def digon():
    """Two parallel edges between 0 and 1."""
    return Multigraph.from_pairs(2, [(0, 1), (0, 1)])
