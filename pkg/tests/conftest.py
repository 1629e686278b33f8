import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    n = report.user_properties and dict(report.user_properties).get("criterion")
    if n:
        prev = _results.get(n, True)
        _results[n] = prev and report.outcome == "passed"


@pytest.fixture(autouse=True)
def _tag_criterion(request, record_property):
    m = request.node.get_closest_marker("criterion")
    if m:
        record_property("criterion", m.args[0])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _results[n] else 'FAIL'}")
