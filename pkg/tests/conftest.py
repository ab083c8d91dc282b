import pytest

from zpr import Submodule, make_ring

from corpus import PAPER_ROWS

_criteria = []


@pytest.fixture
def z8():
    return make_ring(2, 3)


@pytest.fixture
def z9():
    return make_ring(3, 2)


@pytest.fixture
def paper_m(z8):
    return Submodule.span(z8, 3, PAPER_ROWS)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (report.when == "call" or report.outcome != "passed"):
        _criteria.append((marker.args[0], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _criteria:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")
