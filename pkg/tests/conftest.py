import numpy as np
import pytest

from kinewave.fundamental import LinkParams

# Arc parameter sets used across the suite; the seven-link benchmark
# network wires them together as I1..I7.
ARCS = {
    "I1": LinkParams(rho_jam=400.0, k=30.0, w=10.0, C=3000.0, L=3.0),
    "I2": LinkParams(rho_jam=200.0, k=30.0, w=10.0, C=1500.0, L=3.0),
    "I3": LinkParams(rho_jam=400.0, k=30.0, w=10.0, C=3000.0, L=3.0),
    "I4": LinkParams(rho_jam=100.0, k=30.0, w=10.0, C=750.0, L=3.0),
    "I5": LinkParams(rho_jam=200.0, k=30.0, w=10.0, C=1500.0, L=3.0),
    "I6": LinkParams(rho_jam=200.0, k=30.0, w=10.0, C=1500.0, L=3.0),
    "I7": LinkParams(rho_jam=200.0, k=30.0, w=10.0, C=1500.0, L=3.0),
}


@pytest.fixture
def arc1() -> LinkParams:
    return ARCS["I1"]


@pytest.fixture
def arc4() -> LinkParams:
    return ARCS["I4"]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
