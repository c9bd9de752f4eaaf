from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from fibslope import presets
from fibslope.analysis import analyze
from fibslope.pencil import fibration_from_spec

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: dict[int, str] = {}


def record_acceptance(number: int, passed: bool, text: str) -> None:
    ACCEPTANCE_LINES[number] = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {text}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])


@pytest.fixture(scope="session")
def plane18():
    return analyze(presets.plane_nodal_18())


@pytest.fixture(scope="session")
def quadric26():
    return analyze(presets.quadric_nodal_26())


@pytest.fixture(scope="session")
def quadric24():
    return analyze(presets.quadric_nodal_24())


@pytest.fixture(scope="session")
def plane18_model():
    return fibration_from_spec(presets.plane_nodal_18())
