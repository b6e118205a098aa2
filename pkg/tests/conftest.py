import random

import pytest
from hypothesis import strategies as st

from graphcover import fixtures
from graphcover.graph import Walk
from graphcover.randomgen import random_connected_graph

FIXTURE_GRAPHS = {
    "L1": fixtures.loop_graph(),
    "B2": fixtures.figure_eight(),
    "C2": fixtures.cycle(2),
    "C3": fixtures.cycle(3),
    "D2": fixtures.double_figure_eight(),
}


@pytest.fixture
def L1():
    return fixtures.loop_graph()


@pytest.fixture
def B2():
    return fixtures.figure_eight()


@pytest.fixture
def C2():
    return fixtures.cycle(2)


@pytest.fixture
def D2():
    return fixtures.double_figure_eight()


def random_graphs(count, seed=1234, **kw):
    rng = random.Random(seed)
    return [random_connected_graph(rng, **kw) for _ in range(count)]


graphs = st.sampled_from(list(FIXTURE_GRAPHS.values()) + random_graphs(6, max_vertices=5, max_edges=8))


@st.composite
def walks(draw, graph=None, max_len=12, start=None):
    g = graph if graph is not None else draw(graphs)
    here = start if start is not None else draw(st.sampled_from(g.vertices))
    w0 = here
    steps = []
    for _ in range(draw(st.integers(0, max_len))):
        options = g.neighbours(here)
        if not options:
            break
        step = draw(st.sampled_from(options))
        steps.append(step)
        here = g.step_range(step)
    return Walk(g, w0, steps)
