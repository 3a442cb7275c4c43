import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vacuum_pressure.units import ev_to_angular_frequency  # noqa: E402


@pytest.fixture
def omega_p_10ev():
    return ev_to_angular_frequency(10.0)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
