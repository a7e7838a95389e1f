import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict[str, tuple[int, str, bool]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _results[report.nodeid] = (int(m.group(1)), m.group(2), report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, ok in sorted(_results.values()):
        terminalreporter.write_line(f"criterion {num:2d} {name.replace('_', ' '):<40} {'PASS' if ok else 'FAIL'}")
