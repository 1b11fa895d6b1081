"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

_LINES = {}
_TITLES = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.module.__name__.endswith("test_acceptance"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _TITLES[item.nodeid] = doc


def pytest_runtest_logreport(report):
    if report.nodeid not in _TITLES:
        return
    if report.failed or (report.when == "call" and report.nodeid not in _LINES):
        _LINES[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, title in _TITLES.items():
        if nodeid in _LINES:
            terminalreporter.write_line(f"{_LINES[nodeid]} {title}")
