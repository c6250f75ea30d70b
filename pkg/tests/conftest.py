import pytest

from oracles import leibniz_det

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(id, description): exit criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker and (report.when == "call" or report.outcome != "passed"):
        _ACCEPTANCE.setdefault(marker, report.outcome)
        if report.outcome != "passed":
            _ACCEPTANCE[marker] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("acceptance")
    if mark:
        outcome.get_result().acceptance = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (cid, desc), outcome in sorted(_ACCEPTANCE.items(), key=lambda kv: kv[0][0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {cid:<3} {desc}")


@pytest.fixture
def leibniz():
    return leibniz_det
