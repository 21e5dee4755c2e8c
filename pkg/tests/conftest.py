import pytest

CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str, elapsed: float) -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail} ({elapsed:.1f}s)"
        CRITERIA.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
