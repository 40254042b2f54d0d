import pytest

from erkn import fpu_system


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture(scope="session")
def fpu3():
    """The benchmark lattice: m=3, omega=50."""
    return fpu_system(3, 50.0)


@pytest.fixture
def acceptance_log(request):
    """Record one human-readable pass/fail line per acceptance criterion."""
    lines = request.config._acceptance_lines

    def record(line: str) -> None:
        lines.append(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
