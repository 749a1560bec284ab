import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from girth.generators import named  # noqa: E402

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def petersen():
    return named("petersen")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
