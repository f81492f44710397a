import pytest

from rcbij.crystal_tableaux import column, from_rows, path
from rcbij.rigged_config import RiggedConfiguration
from rcbij.root_data import DynkinSpec

D4 = DynkinSpec("D", 4)
D5 = DynkinSpec("D", 5)
A3 = DynkinSpec("A", 3)


def five_factor_rc():
    return RiggedConfiguration(
        D5,
        ((3, 2), (3, 1), (2, 2), (1, 2), (1, 1)),
        (
            ((2, 0), (2, 0)),
            ((3, 0), (2, 1), (1, 1)),
            ((3, 0), (2, 0), (1, 0), (1, 0)),
            ((2, 0), (1, 0)),
            ((2, 1),),
        ),
    )


def five_factor_path():
    return path(
        D5,
        from_rows([[1, 3], [2, -5], [4, 5]]),
        column(1, 4, 5),
        from_rows([[2, 1], [3, -1]]),
        from_rows([[1, 2]]),
        column(1),
    )


def two_factor_rc():
    return RiggedConfiguration(
        D5,
        ((2, 2), (3, 2)),
        (
            ((4, -1),),
            ((4, 1), (3, 1), (1, 0)),
            ((5, -3), (3, -2), (3, -2), (1, 0)),
            ((5, 0), (1, 0)),
            ((3, 0), (2, -1)),
        ),
    )


def two_factor_path():
    return path(D5, from_rows([[1, 5], [-3, -1]]), from_rows([[1, -5], [4, -3], [5, -1]]))


def two_factor_r_image():
    return path(D5, from_rows([[1, 4], [5, -2], [-3, -1]]), from_rows([[2, -5], [5, -3]]))


@pytest.fixture
def rc_a():
    return five_factor_rc()


@pytest.fixture
def path_a():
    return five_factor_path()


@pytest.fixture
def rc_b():
    return two_factor_rc()


@pytest.fixture
def path_b():
    return two_factor_path()


_LINES = []


def record_line(line):
    _LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
