import _gate


def pytest_terminal_summary(terminalreporter):
    if not _gate.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_gate.LINES):
        terminalreporter.write_line(_gate.LINES[n])
