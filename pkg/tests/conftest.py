import pytest

from qtcodes import kernels

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # JIT compilation must not count against the timed criteria
    kernels.warm_up()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
