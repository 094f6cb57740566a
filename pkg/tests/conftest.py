import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vertexflame import fixtures
from vertexflame.digraph import build_digraph
from vertexflame.oracle import gen_random

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n=2, max_n=8):
    """Rooted digraphs with an arbitrary edge set over ``r, v01, ...``."""
    n = draw(st.integers(min_n, max_n))
    names = ["r"] + [f"v{i:02d}" for i in range(1, n)]
    pairs = [(a, b) for a in names for b in names[1:] if a != b]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return build_digraph(names, sorted(edges), "r")


def seeded_digraphs(max_n=8):
    return st.builds(
        gen_random,
        st.integers(2, max_n),
        st.sampled_from([0.2, 0.35, 0.5, 0.7]),
        st.integers(0, 10**6),
    )


@pytest.fixture
def star():
    return fixtures.star()


@pytest.fixture
def chain():
    return fixtures.chain()


@pytest.fixture
def chainz():
    return fixtures.chainz()


@pytest.fixture
def diamond():
    return fixtures.diamond()


@pytest.fixture
def extra():
    return fixtures.extra()


@pytest.fixture
def cross():
    return fixtures.cross()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
