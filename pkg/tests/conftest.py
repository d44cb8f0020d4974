import pytest

ACCEPTANCE: list[str] = []


@pytest.fixture
def report():
    """Record one acceptance line; the lines are repeated in the summary."""
    def _report(number: int, ok: bool, text: str) -> bool:
        line = f"{'PASS' if ok else 'FAIL'} {number} {text}"
        print(line)
        ACCEPTANCE.append(line)
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
