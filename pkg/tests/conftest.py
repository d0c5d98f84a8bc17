"""Shared test plumbing: the acceptance summary printed after the run."""

_ACCEPTANCE_LINES = []


def record_criterion(name, ok, detail):
    """Log one acceptance criterion outcome and assert it."""
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    _ACCEPTANCE_LINES.append(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
