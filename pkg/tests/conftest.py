import sys

import pytest
from hypothesis import settings

from multiarity.report import CheckConfig

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def cfg():
    return CheckConfig(max_instances=20_000, seed=0)


@pytest.fixture
def big_cfg():
    # large enough that the desk-scale fixtures enumerate every law exhaustively
    return CheckConfig(max_instances=500_000, seed=0)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
