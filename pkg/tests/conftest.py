import pytest

from grasscoh import bott, chow, les, lr

ACCEPTANCE_LINES: dict[int, str] = {}


def clear_all_caches():
    bott.clear_caches()
    lr.clear_caches()
    chow.clear_caches()
    les.reset_default_engine()


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(number, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        ACCEPTANCE_LINES[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
