import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from support import corpus_graphs, embedded_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()

@pytest.fixture(scope="session")
def embedded():
    return embedded_corpus()


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # First call into a jitted kernel pays compilation cost; do it here so
    # timed acceptance criteria measure the algorithm, not the compiler.
    from aecolor import kernels
    from aecolor.coloring import PartialEdgeColoring, find_bichromatic_cycle
    from aecolor.families import cycle_graph

    g = cycle_graph(4)
    phi = PartialEdgeColoring.from_pairs(g, 3, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])
    find_bichromatic_cycle(g, phi)
    phi.walk_end(0, 1, 2)
    del kernels
