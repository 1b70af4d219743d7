import pytest

from helpers import figure3


@pytest.fixture
def fig3():
    """The four-vertex example network used throughout the worked examples."""
    return figure3()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when != "call" and not (call.when == "setup" and call.excinfo is not None):
        return
    number, title = marker.args
    passed = call.excinfo is None
    item.config._criteria[number] = (title, passed, call.duration)


def pytest_terminal_summary(terminalreporter, config):
    criteria = getattr(config, "_criteria", {})
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(criteria):
        title, passed, duration = criteria[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title} ({duration:.2f}s)")
