import numpy as np
import pytest

from ncwitness import states


@pytest.fixture
def sigma():
    return states.sigma_ncc()


@pytest.fixture
def bell():
    return states.bell_state()


@pytest.fixture
def mixed():
    return np.eye(4, dtype=complex) / 4


@pytest.fixture
def zero():
    return states.basis_state("00")


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body sets ``detail`` as it goes."""
    entry = {"name": request.node.name, "detail": ""}
    yield entry
    _ACCEPTANCE.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and "criterion" in item.fixturenames:
        item.funcargs["criterion"]["passed"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in sorted(_ACCEPTANCE, key=lambda e: e["name"]):
        status = "PASS" if entry.get("passed") else "FAIL"
        terminalreporter.write_line(f"{status}  {entry['name']}  {entry['detail']}")
