import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stablepart import CyclicPartition, PreferenceInstance  # noqa: E402

CLASSIC_1BASED = [[2, 3, 4], [3, 1, 4], [1, 2, 4], [1, 2, 3]]


@pytest.fixture
def classic():
    return PreferenceInstance.from_prefs_1based(CLASSIC_1BASED)


@pytest.fixture
def classic_tri():
    return CyclicPartition.from_cycles_1based([(1, 2, 3), (4,)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
