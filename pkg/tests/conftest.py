import pytest

CRITERIA: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary."""

    def record(number: int, title: str, passed: bool, detail: str):
        CRITERIA[number] = (title, passed, detail)
        print(f"criterion {number:2d} {'PASS' if passed else 'FAIL'}: {title}: {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, passed, detail = CRITERIA[number]
        terminalreporter.write_line(f"{number:2d} {'PASS' if passed else 'FAIL'}  {title}: {detail}")
