import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from temqubit import TransverseGrid, derive_beam


@pytest.fixture(scope="session")
def env():
    """Reference beam: 10 keV kinetic energy in a 0.1 T field."""
    return derive_beam(10_000.0, 0.1, relativistic_mass=True)


@pytest.fixture(scope="session")
def waist(env):
    return env.magnetic_waist_wm


@pytest.fixture(scope="session")
def grid256(waist):
    """Fast grid: fine enough for qubit-subspace work to ~1e-7."""
    return TransverseGrid(256, 4.0 * waist)


@pytest.fixture(scope="session")
def grid512(waist):
    """Default production grid."""
    return TransverseGrid(512, 4.0 * waist)
