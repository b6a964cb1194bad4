"""
Sign Corroboration

Planar experiment certifying that the Thomas angle eps and its generating
angle theta have opposite signs. v is built by rotating u through theta in
the z = 0 plane; gyr[u,v] is then computed from the closed form and compared
against a plain rotation through eps about +z.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd

from .ball_core import BallVec, EinsteinBall
from .config import DEFAULT_C
from .exceptions import Degenerate, GyroError, NotPlanar, ZeroVector
from .gyration_engine import (
    DEGENERATE_SIN,
    Z_AXIS,
    angle_from_gammas,
    epsilon_from_k,
    generating_angle,
    gyr_closed_form,
    precession_angles,
    rotation_from_axis_angle,
)

logger = logging.getLogger(__name__)

DEFAULT_PROBE = (0.1, 0.2, 0.0)
LADDER_COLUMNS = ["speed", "k", "max_angle_gap", "max_cos_gap", "max_sin_gap", "max_sin_gap_acute"]


@dataclass(frozen=True)
class SignCheckReport:
    """Outcome of one planar sign experiment."""

    theta: float
    epsilon: float
    residual: float
    opposite_signs: Optional[bool]
    applicable: bool = True

    def to_dict(self) -> dict:
        return {
            "theta": self.theta,
            "epsilon": self.epsilon,
            "residual": self.residual,
            "opposite_signs": self.opposite_signs,
            "applicable": self.applicable,
        }


def rotate_in_plane(u: BallVec, theta: float, speed_ratio: float = 1.0) -> BallVec:
    """
    Rotate u through theta in the z = 0 plane and rescale its speed.

    Args:
        u: non-zero planar velocity
        theta: signed angle, counterclockwise positive seen from +z
        speed_ratio: ||v|| / ||u||, positive

    Returns:
        BallVec: v with ||v|| = speed_ratio ||u||

    Raises:
        ZeroVector: if u is zero
        NotPlanar: if u has a z component
        OutOfBall: if the rescaled speed reaches c
    """
    if u.is_zero():
        raise ZeroVector("cannot rotate the zero velocity")
    if u.z != 0.0:
        raise NotPlanar(f"planar rotation needs z = 0, got z = {u.z}")
    if not speed_ratio > 0.0:
        raise GyroError(f"speed ratio must be positive, got {speed_ratio}")

    co, s = math.cos(theta), math.sin(theta)
    return BallVec(
        speed_ratio * (co * u.x - s * u.y),
        speed_ratio * (s * u.x + co * u.y),
        0.0,
        u.c,
    )


def sign_check(
    u: BallVec,
    theta: float,
    speed_ratio: float = 1.0,
    w: Optional[BallVec] = None,
    allow_degenerate: bool = False,
) -> SignCheckReport:
    """
    Compare gyr[u, v] w with the rotation of w through eps about +z.

    Args:
        u: non-zero planar velocity
        theta: generating angle used to build v
        speed_ratio: ||v|| / ||u||
        w: probe velocity, (0.1, 0.2, 0) by default
        allow_degenerate: report instead of raising when sin theta = 0

    Returns:
        SignCheckReport: theta is reported in (-pi, pi]

    Raises:
        Degenerate: if sin theta = 0 and allow_degenerate is False
    """
    v = rotate_in_plane(u, theta, speed_ratio)
    probe = w if w is not None else BallVec(*DEFAULT_PROBE, c=u.c)
    measured = math.atan2(math.sin(theta), math.cos(theta))

    if abs(math.sin(theta)) <= DEGENERATE_SIN:
        if not allow_degenerate:
            raise Degenerate(f"sin(theta) = 0 at theta = {theta}; no sign verdict exists")
        residual = float(np.max(np.abs(gyr_closed_form(u, v).apply(probe).array - probe.array)))
        return SignCheckReport(measured, 0.0, residual, None, applicable=False)

    measured = generating_angle(u, v, Z_AXIS)
    cos_eps, sin_eps = angle_from_gammas(u, v, Z_AXIS)
    epsilon = math.atan2(sin_eps, cos_eps)

    lhs = gyr_closed_form(u, v).apply(probe).array
    rhs = rotation_from_axis_angle(Z_AXIS, epsilon).apply(probe.array)
    residual = float(np.max(np.abs(lhs - rhs)))

    opposite = np.sign(epsilon) == -np.sign(measured) and epsilon != 0.0
    return SignCheckReport(measured, epsilon, residual, bool(opposite))


def sign_sweep(
    samples: int,
    seed: int = 0,
    c: float = DEFAULT_C,
    max_speed: float = 0.95,
    min_sin: float = 1e-6,
) -> pd.DataFrame:
    """
    Run the sign experiment on seeded random inputs.

    u, v speeds are uniform in [0.01 c, max_speed c], theta is uniform in
    (-pi, pi) with |sin theta| > min_sin and the probe w is random in the ball.

    Returns:
        pd.DataFrame: one row per sample with speeds, theta, epsilon,
            residual and opposite_signs
    """
    if samples < 0:
        raise GyroError(f"sample count must be >= 0, got {samples}")
    rng = np.random.default_rng(seed)
    ball = EinsteinBall(c)
    rows = []

    for _ in range(samples):
        u_speed, v_speed = rng.uniform(0.01, max_speed, size=2) * c
        heading = rng.uniform(-math.pi, math.pi)
        theta = rng.uniform(-math.pi, math.pi)
        while abs(math.sin(theta)) <= min_sin:
            theta = rng.uniform(-math.pi, math.pi)

        u = BallVec(u_speed * math.cos(heading), u_speed * math.sin(heading), 0.0, c)
        report = sign_check(u, theta, v_speed / u_speed, ball.sample(rng, max_speed))
        rows.append(
            {
                "u_speed": u_speed,
                "v_speed": v_speed,
                "theta": report.theta,
                "epsilon": report.epsilon,
                "residual": report.residual,
                "opposite_signs": report.opposite_signs,
            }
        )

    frame = pd.DataFrame(
        rows, columns=["u_speed", "v_speed", "theta", "epsilon", "residual", "opposite_signs"]
    )
    if samples:
        failures = int((~frame["opposite_signs"].astype(bool)).sum())
        logger.info(
            f"Sign sweep: {samples} samples, max residual {frame['residual'].max():.3e}, "
            f"{failures} sign exceptions"
        )
    return frame


def high_speed_ladder(
    speeds: Sequence[float] = (0.9, 0.99, 0.999),
    exclusion: float = 0.2,
    points: int = 181,
    c: float = DEFAULT_C,
) -> pd.DataFrame:
    """
    Distance of eps from -theta as speeds grow.

    Both velocities share each ladder speed; theta runs over a grid of
    (-pi, pi) that skips |theta| > pi - exclusion. For fixed theta, |eps|
    climbs monotonically toward |theta| as k falls to 1, so max_angle_gap
    (|eps + theta|) and max_cos_gap shrink strictly along an increasing
    ladder. The sine gap only shrinks where |theta| <= pi/2
    (max_sin_gap_acute); over the whole grid max_sin_gap is a diagnostic and
    can grow near |theta| = pi, where k - 1 is not yet small against
    1 + cos theta.

    Returns:
        pd.DataFrame: speed, k, max_angle_gap, max_cos_gap, max_sin_gap,
            max_sin_gap_acute per ladder rung
    """
    thetas = np.linspace(-(math.pi - exclusion), math.pi - exclusion, points)
    rows = []
    for speed in speeds:
        u = BallVec(speed * c, 0.0, 0.0, c)
        angle_gap = cos_gap = sin_gap = sin_gap_acute = 0.0
        k = math.nan
        for theta in thetas:
            if abs(math.sin(theta)) <= DEGENERATE_SIN:
                continue
            angles = precession_angles(u, rotate_in_plane(u, float(theta)), Z_AXIS)
            k = angles.k
            angle_gap = max(angle_gap, abs(angles.epsilon + theta))
            cos_gap = max(cos_gap, abs(angles.cos_eps - math.cos(theta)))
            gap = abs(angles.sin_eps + math.sin(theta))
            sin_gap = max(sin_gap, gap)
            if abs(theta) <= math.pi / 2.0:
                sin_gap_acute = max(sin_gap_acute, gap)
        rows.append(
            {
                "speed": speed,
                "k": k,
                "max_angle_gap": angle_gap,
                "max_cos_gap": cos_gap,
                "max_sin_gap": sin_gap,
                "max_sin_gap_acute": sin_gap_acute,
            }
        )
    frame = pd.DataFrame(rows, columns=LADDER_COLUMNS)
    if not frame["max_sin_gap"].is_monotonic_decreasing:
        logger.info("High-speed ladder: full-grid sine gap is not monotone (expected near |theta| = pi)")
    return frame


def angle_sweep(k_values: Iterable[float], samples: int) -> pd.DataFrame:
    """
    cos eps and -sin eps against theta on a uniform grid of [0, 2 pi].

    Args:
        k_values: velocity parameters, each > 1
        samples: grid points per k, >= 2

    Returns:
        pd.DataFrame: columns k, theta, cos_eps, neg_sin_eps; rows where
            |sin theta| < 1e-12 report eps = 0

    Raises:
        GyroError: on k <= 1 or samples < 2
    """
    k_values = list(k_values)
    if samples < 2:
        raise GyroError(f"a sweep needs at least 2 samples, got {samples}")
    if not k_values:
        raise GyroError("a sweep needs at least one k value")
    for k in k_values:
        if not k > 1.0:
            raise GyroError(f"velocity parameter k must exceed 1, got {k}")

    thetas = np.linspace(0.0, 2.0 * math.pi, samples)
    rows = []
    for k in k_values:
        for theta in thetas:
            cos_eps, sin_eps = epsilon_from_k(k, float(theta))
            rows.append({"k": k, "theta": float(theta), "cos_eps": cos_eps, "neg_sin_eps": 0.0 - sin_eps})
    return pd.DataFrame(rows, columns=["k", "theta", "cos_eps", "neg_sin_eps"])
