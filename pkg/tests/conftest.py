"""Collects per-criterion outcomes from tests marked ``criterion`` and
prints one PASS/FAIL line for each at the end of the run."""

from collections import OrderedDict

_OUTCOMES = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _OUTCOMES.setdefault(mark.args[0], True)


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark and call.excinfo is not None:
        _OUTCOMES[mark.args[0]] = False


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _OUTCOMES.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
