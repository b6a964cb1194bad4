import pytest

from src.ball_core import BallVec


@pytest.fixture
def generic_triple():
    """Three non-coplanar velocities well inside the unit ball."""
    return (
        BallVec(0.5, -0.2, 0.3),
        BallVec(-0.1, 0.7, 0.2),
        BallVec(0.3, 0.1, -0.6),
    )
