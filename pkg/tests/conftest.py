import pytest

from semigreen.corpus import brandt_b2, full_transformation_monoid, i3_full

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    item_marker = _markers.get(report.nodeid)
    if item_marker is not None:
        n, title = item_marker
        _criteria[n] = (title, report.outcome)


_markers = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _markers[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, outcome = _criteria[n]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {mark}  {title}")


@pytest.fixture(scope="session")
def b2():
    return brandt_b2()


@pytest.fixture(scope="session")
def t3():
    return full_transformation_monoid(3)


@pytest.fixture(scope="session")
def i3():
    return i3_full()
