import pytest
import torch

from gssflab.contact import builtin_space
from gssflab.submanifold import builtin_embedding, synth_sigma


@pytest.fixture(autouse=True)
def _deterministic():
    torch.manual_seed(0)
    yield


@pytest.fixture(scope="session")
def sasakian_r5():
    return builtin_space("sasakian-r5")


@pytest.fixture(scope="session")
def sasakian_r3():
    return builtin_space("sasakian-r3")


@pytest.fixture(scope="session")
def kenmotsu_h5():
    return builtin_space("kenmotsu-h5")


@pytest.fixture(scope="session")
def kenmotsu_h3():
    return builtin_space("kenmotsu-h3")


@pytest.fixture(scope="session")
def flat3():
    return builtin_space("cosymplectic-flat-3")


@pytest.fixture(scope="session")
def r3_in_r5():
    return builtin_embedding("r3-in-r5-sasakian")


@pytest.fixture(scope="session")
def h3_in_h5():
    return builtin_embedding("h3-in-h5-kenmotsu")


@pytest.fixture(scope="session")
def circle():
    return builtin_embedding("circle-calibration")


@pytest.fixture(scope="session")
def anti_invariant():
    return builtin_embedding("slice-anti-invariant")


@pytest.fixture(scope="session")
def synth_r5(r3_in_r5):
    return synth_sigma(0, r3_in_r5)


@pytest.fixture(scope="session")
def synth_h5(h3_in_h5):
    return synth_sigma(0, h3_in_h5)


@pytest.fixture
def point3():
    return torch.tensor([0.3, -0.2, 0.1], dtype=torch.float64)


@pytest.fixture
def point5():
    return torch.tensor([0.3, -0.2, 0.1, 0.4, -0.5], dtype=torch.float64)
