import pytest

from thermoprobe import RodConfig
from thermoprobe.experiments import paper_config

# criterion id -> (passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def fe_ag():
    """10 m bar, Fe on the hidden side, Ag on the measured side."""
    return paper_config(419.0)


@pytest.fixture
def al_pb():
    return paper_config(35.0)


@pytest.fixture
def ag_cu():
    return paper_config(386.0)


@pytest.fixture
def short_bar():
    """1 m bar with the interface in the middle, used for profile examples."""
    def make(kappa_B, interface=0.5):
        return RodConfig(length=1.0, interface=interface, source_temp=100.0,
                         ambient_temp=25.0, convection=10.0, kappa_B=kappa_B)
    return make


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        passed, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {key}: {detail}")
