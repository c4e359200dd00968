import pytest

# filled by tests/test_acceptance.py: (number, title, passed, seconds, note)
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, secs, note in sorted(ACCEPTANCE_LINES):
        status = "PASS" if passed else "FAIL"
        extra = f" ({note})" if note else ""
        terminalreporter.write_line(f"[{status}] {num:2d}. {title}: {secs:.2f} s{extra}")
