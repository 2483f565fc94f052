import pytest

from negabeta import complexity, oracle

_criteria = {}


def clear_caches():
    complexity.construct.cache_clear()
    oracle.allowed_patterns_integer.cache_clear()
    oracle.allowed_patterns_real.cache_clear()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    if hasattr(report, "wasxfail"):
        status = f"FAIL (expected failure: {report.wasxfail})"
    elif report.passed:
        status = "PASS"
    else:
        status = "FAIL"
    detail = dict(item.user_properties).get("detail")
    _criteria[marker.args[0]] = f"criterion {marker.args[0]}: {status}" + (f" [{detail}]" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        terminalreporter.write_line(_criteria[key])
