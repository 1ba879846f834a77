import numpy as np
import pytest
from hypothesis import strategies as st

from hamilton import Quaternion, UnitQuaternion, Vector3

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20160610)


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""
    def _report(name, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


small_ints = st.integers(-50, 50)
reals = st.floats(-10, 10, allow_nan=False, allow_infinity=False)

int_quaternions = st.builds(Quaternion, small_ints, small_ints, small_ints, small_ints)
quaternions = st.builds(Quaternion, reals, reals, reals, reals)
vectors = st.builds(Vector3, reals, reals, reals)


@st.composite
def unit_quaternions(draw):
    g = draw(st.lists(st.floats(-1, 1, allow_nan=False), min_size=4, max_size=4))
    g = np.asarray(g)
    n = np.linalg.norm(g)
    if n < 1e-3:
        g, n = np.array([1.0, 0, 0, 0]), 1.0
    return UnitQuaternion(*(g / n))


@st.composite
def unit_axes(draw):
    g = np.asarray(draw(st.lists(st.floats(-1, 1, allow_nan=False), min_size=3, max_size=3)))
    n = np.linalg.norm(g)
    if n < 1e-3:
        return Vector3(0.0, 0.0, 1.0)
    return Vector3(*(g / n))
