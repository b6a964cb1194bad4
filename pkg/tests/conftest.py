import numpy as np
import pytest

from src.ball_core import BallVec, EinsteinBall


@pytest.fixture
def ball():
    """Unit ball with the default tolerance."""
    return EinsteinBall()


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def u_x():
    """Speed 0.6 along x (gamma = 5/4)."""
    return BallVec(0.6, 0.0, 0.0)


@pytest.fixture
def v_y():
    """Speed 0.6 along y (gamma = 5/4)."""
    return BallVec(0.0, 0.6, 0.0)
