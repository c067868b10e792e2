"""Shared fixtures: the standard trap, grids sized so a sits on a node."""
import numpy as np
import pytest

from pairstat import Grid1D, WellSpec, even_mode, odd_mode


@pytest.fixture(scope="session")
def well():
    return WellSpec(0.5)


@pytest.fixture(scope="session")
def std_grid():
    # dx = 0.01, odd count: pure Simpson, 0 and +-a on nodes
    return Grid1D(-40.0, 40.0, 8001)


@pytest.fixture(scope="session")
def narrow_grid():
    return Grid1D(-1.0, 1.0, 4001)


@pytest.fixture(scope="session")
def same_parity_modes(well):
    return even_mode(0, well), even_mode(1, well)


@pytest.fixture(scope="session")
def opposite_parity_modes(well):
    return even_mode(1, well), odd_mode(1, well)


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)
