import numpy as np
import pytest
from hypothesis import settings

from xyzness.gate import ModelParams

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

TAU = 0.65j
AL4 = 0.165 + 0.13j


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


@pytest.fixture
def chain_b():
    """Case B reference point with a generic anisotropy and right reset."""
    return ModelParams.infer(0.185j, 0.3, TAU, AL4, AL4 + 0.185j, 7)


def generic_params(regime: str, N: int, shift: complex = 0.05) -> ModelParams:
    if regime == "B":
        u, eta = 0.185j, 0.3
    else:
        u, eta = 0.185, 0.3j
    return ModelParams.infer(u, eta, TAU, AL4, AL4 + u + shift, N)


def random_unitary_params(rng, N=3) -> ModelParams:
    """Random case A or case B point away from the singular set."""
    tau = 1j * rng.uniform(0.4, 1.0)
    aL = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.2, 0.2))
    aR = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.2, 0.2))
    if rng.random() < 0.5:
        u, eta = 1j * rng.uniform(0.05, 0.3), rng.uniform(0.1, 0.45)
    else:
        u, eta = rng.uniform(0.05, 0.3), 1j * rng.uniform(0.05, 0.25)
    return ModelParams.infer(u, eta, tau, aL, aR, N)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[k])
