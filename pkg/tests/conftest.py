import pytest

from bezoutlab.rings import INTEGERS, GFx, Zloc, Zmod

RINGS = [INTEGERS, Zmod(6), Zmod(12), Zmod(7), GFx(3), Zloc(5)]

# pass/fail lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=RINGS, ids=str)
def ring(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
