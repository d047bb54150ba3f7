# Keeps this directory importable (oracle.py) and prints one verdict line
# per acceptance criterion in the terminal summary, where pytest's output
# capture cannot swallow it.

import pytest

_verdicts = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    n = marker.args[0]
    if report.failed:
        _verdicts[n] = False
    elif report.when == "call" and n not in _verdicts:
        _verdicts[n] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_verdicts):
        verdict = "PASS" if _verdicts[n] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {n}: {verdict}")
