import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from alphaline.graph import Graph, build_graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, max_vertices=9, max_edges=None, min_vertices=1) -> Graph:
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return build_graph(n, [])
    cap = len(pairs) if max_edges is None else min(max_edges, len(pairs))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=cap, unique=True))
    return build_graph(n, chosen)


def naive_alpha(g: Graph) -> int:
    """itertools enumeration, largest size first."""
    for k in range(g.n, -1, -1):
        for combo in itertools.combinations(range(g.n), k):
            s = set(combo)
            if not any(u in s and v in s for u, v in g.edges):
                return k
    return 0


def naive_nu(g: Graph) -> int:
    for k in range(len(g.edges), -1, -1):
        for combo in itertools.combinations(g.edges, k):
            ends = [x for e in combo for x in e]
            if len(ends) == len(set(ends)):
                return k
    return 0


@pytest.fixture
def k4():
    return build_graph(4, itertools.combinations(range(4), 2))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
