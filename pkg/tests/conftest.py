import sys

import pytest

from nspduality import decode

M2BOND = '{"E":2,"sigma":[2,3,0,1],"root":0}'
C3 = '{"E":3,"sigma":[2,4,0,5,1,3],"root":0}'
BAND = '{"E":3,"sigma":[2,4,5,1,3,0],"root":0}'


@pytest.fixture
def m2bond():
    return decode("map", M2BOND)


@pytest.fixture
def c3():
    return decode("map", C3)


@pytest.fixture
def band():
    return decode("map", BAND)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[k])
