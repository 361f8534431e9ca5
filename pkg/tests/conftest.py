import pytest
from hypothesis import HealthCheck, settings

from instances import ACCEPTANCE_LINES
from quadrecon.algebra import CATALOG, cayley_matrix_of, make_group

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")



@pytest.fixture(scope="session")
def catalog():
    """name -> (group, standard Cayley matrix) for the order 4..8 catalog."""
    out = {}
    for name, spec in CATALOG.items():
        G = make_group(spec)
        out[name] = (G, cayley_matrix_of(G))
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
