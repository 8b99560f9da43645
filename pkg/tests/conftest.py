import random

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def report_line():
    def emit(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
