import pytest

# filled by test_acceptance; one (criterion, passed, detail) per criterion
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def record():
    def _record(number: int, name: str, passed: bool, detail: str):
        ACCEPTANCE[number] = (name, bool(passed), detail)
        print(f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {name}: {detail}")
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        name, passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {name}: {detail}")
