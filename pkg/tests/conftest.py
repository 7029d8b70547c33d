import random
import sys

import pytest
from hypothesis import strategies as st

from tolltransit.graphs import Graph
from tolltransit.harness import corpus, random_transit


@pytest.fixture(scope="session")
def corpus6():
    return corpus(6)


def random_connected_graph(n, p, rng):
    """Random spanning tree plus extra edges with probability p."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.add((a, b))
    return Graph(n, sorted(edges))


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.1, 0.2, 0.35, 0.5, 0.8]))
    return random_connected_graph(n, p, random.Random(seed))


@st.composite
def transit_functions(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.1, 0.2, 0.3, 0.4, 0.5]))
    return random_transit(n, p, random.Random(seed))


def pytest_terminal_summary(terminalreporter):
    """List the acceptance criteria results, one line each."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
