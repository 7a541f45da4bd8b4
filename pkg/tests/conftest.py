import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_outcome():
    def record(outcome):
        ACCEPTANCE_LINES.append(outcome.line())
        print(outcome.line())
        return outcome
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
