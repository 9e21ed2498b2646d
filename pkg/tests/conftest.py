import pytest

from polarlattice import SystemParams


@pytest.fixture
def defaults():
    return SystemParams()


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (label, passed, detail)."""
    def record(label, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
        assert passed, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
