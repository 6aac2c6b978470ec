import sys

import numpy as np
import pytest

from anyonspdc import DelayGrid, FrequencyGrid, SpatialGrid, beta_from_waist
from anyonspdc.device import REFERENCE_DEVICE

WAIST = 1e-3


@pytest.fixture(scope="session")
def device():
    return REFERENCE_DEVICE


@pytest.fixture(scope="session")
def beta(device):
    return beta_from_waist(device, WAIST)


@pytest.fixture(scope="session")
def pm_grid(beta):
    # wide enough for the analytic family to be negligible at the edges
    return FrequencyGrid.symmetric(4001, 40 * beta)


@pytest.fixture(scope="session")
def delays(beta):
    return DelayGrid.symmetric(201, 20 / beta)


@pytest.fixture(scope="session")
def experiment_grids(device, beta):
    """Spatial, frequency and delay grids of the bundled experimental configs."""
    return (
        SpatialGrid.symmetric(3001, device.waveguide_length / 2),
        FrequencyGrid.symmetric(8001, 200 * beta),
        DelayGrid.symmetric(201, 100e-12),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
