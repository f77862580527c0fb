import pytest

# criterion number -> (passed, label, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, label: str, passed: bool, detail: str = ""):
        ACCEPTANCE[number] = (passed, label, detail)
        print(f"criterion {number:2d} [{'PASS' if passed else 'FAIL'}] {label} {detail}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, label, detail = ACCEPTANCE[number]
        line = f"criterion {number:2d} [{'PASS' if passed else 'FAIL'}] {label}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
