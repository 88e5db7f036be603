import pytest

_ACCEPTANCE_RESULTS = []


@pytest.fixture
def acceptance_recorder():
    def record(number, ok, elapsed, note=""):
        _ACCEPTANCE_RESULTS.append((number, ok, elapsed, note))
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, elapsed, note in sorted(_ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        line = f"[criterion {number:2d}] {status} ({elapsed:.2f}s)"
        if note:
            line += f" -- {note}"
        terminalreporter.write_line(line)
