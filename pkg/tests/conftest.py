import pytest
from hypothesis import strategies as st

from latticesync.topology import Family, GraphSpec

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    """Collects one pass/fail line per acceptance criterion for the terminal summary."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def valid_specs(draw, max_nodes=400, max_m=3):
    """Random valid lattices with a bounded node count."""
    family = draw(st.sampled_from(list(Family)))
    m = {Family.CYCLE: 1, Family.TORUS2D: 2}.get(family) or draw(st.integers(1, max_m))
    per_dim = max(3, int(max_nodes ** (1.0 / m)))
    dims = tuple(draw(st.integers(3, per_dim)) for _ in range(m))
    r = draw(st.integers(1, (min(dims) - 1) // 2))
    return GraphSpec(family, dims, r)
