"""
Polygonal Orbit Precession

A circular orbit approximated by a regular n-gon traversed at uniform speed.
Each corner turns the velocity by 2*pi/n and precesses the frame by the
Thomas angle eps_n. Accumulating the n corner phases and letting n grow
recovers the Thomas precession per revolution and its angular velocity.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .ball_core import BallVec, gamma_minus_one, gamma_of_speed
from .config import DEFAULT_C
from .exceptions import BadOrbit
from .gyration_engine import epsilon_equal_speeds

logger = logging.getLogger(__name__)

CORNER_TOLERANCE = 1e-12
MAX_SIDES = 10**9


@dataclass(frozen=True)
class OrbitConfig:
    """Uniform orbital speed and number of polygon sides."""

    speed: float
    sides: int
    c: float = DEFAULT_C

    def __post_init__(self):
        if isinstance(self.sides, bool) or int(self.sides) != self.sides or self.sides < 3:
            raise BadOrbit(f"a polygonal orbit needs an integer n >= 3 sides, got {self.sides}")
        if self.sides > MAX_SIDES:
            raise BadOrbit(f"a polygonal orbit takes at most {MAX_SIDES} sides, got {self.sides}")
        if not self.c > 0.0:
            raise BadOrbit(f"ball radius must be positive, got {self.c}")
        if not 0.0 < self.speed < self.c:
            raise BadOrbit(f"orbital speed must lie in (0, c={self.c}), got {self.speed}")
        object.__setattr__(self, "sides", int(self.sides))

    @property
    def turn_angle(self) -> float:
        return 2.0 * math.pi / self.sides

    @property
    def gamma(self) -> float:
        return gamma_of_speed(self.speed, self.c)

    @property
    def gamma_minus_one(self) -> float:
        return gamma_minus_one(self.gamma, self.speed, self.c)


@dataclass(frozen=True)
class PrecessionResult:
    """Per-corner, accumulated and limiting precession of one orbit."""

    speed: float
    sides: int
    gamma: float
    eps_per_corner: float
    total: float
    limit: float
    omega_ratio: float
    gap: float
    phase_modulus: float
    thomas_prefactor: float


def f_phase(phi: float, g: float, g1: Optional[float] = None) -> complex:
    """
    Corner phase minus one, f(phi) = e^{i eps(phi)} - 1, for equal speeds.

    f(phi) = -[(g-1)^2 sin phi + i((g^2-1) + (g-1)^2 cos phi)] sin phi
             / (2 + (g^2-1)(1 + cos phi))

    Args:
        phi: turn angle at the corner
        g: gamma factor of the orbital speed
        g1: g - 1 if already known accurately
    """
    g1 = g - 1.0 if g1 is None else g1
    g2m1 = g1 * (g + 1.0)
    s, co = math.sin(phi), math.cos(phi)
    numerator = complex(g1 * g1 * s, g2m1 + g1 * g1 * co)
    return -numerator * s / (2.0 + g2m1 * (1.0 + co))


def f_prime_zero(g: float, g1: Optional[float] = None) -> complex:
    """Analytic derivative f'(0) = -i (g-1)/g."""
    g1 = g - 1.0 if g1 is None else g1
    return complex(0.0, -g1 / g)


def f_prime_zero_numeric(g: float, g1: Optional[float] = None, h: float = 1e-6) -> complex:
    """Central difference (f(h) - f(-h)) / 2h."""
    return (f_phase(h, g, g1) - f_phase(-h, g, g1)) / (2.0 * h)


def corner_precession(speed: float, n: int, c: float = DEFAULT_C) -> float:
    """
    Thomas angle eps_n at one corner of the regular n-gon orbit.

    Args:
        speed: uniform orbital speed, 0 < speed < c
        n: number of sides, n >= 3
        c: ball radius

    Returns:
        float: eps_n, negative (opposite to the positive turn angle)

    Raises:
        BadOrbit: on n < 3 or speed outside (0, c)
    """
    cfg = OrbitConfig(speed, n, c)
    g, g1 = cfg.gamma, cfg.gamma_minus_one
    eps = cmath.phase(1.0 + f_phase(cfg.turn_angle, g, g1))

    cos_eps, sin_eps = epsilon_equal_speeds(g, cfg.turn_angle, g1)
    drift = abs(math.atan2(sin_eps, cos_eps) - eps)
    if drift > CORNER_TOLERANCE:
        logger.warning(f"⚠️ Corner precession paths disagree by {drift:.3e}")
    return eps


def total_precession(cfg: OrbitConfig) -> PrecessionResult:
    """
    Accumulate the n corner phases of one revolution.

    The n corner phases 1 + f(2 pi/n) are equal, so the unwrapped argument of
    their product is n arg(1 + f) and its modulus |1 + f|^n; the total is
    not reduced mod 2 pi.

    Returns:
        PrecessionResult: eps_n, n eps_n, the n -> infinity limit
            -2 pi (g-1)/g and the angular velocity ratio -(g-1)/g
    """
    g, g1 = cfg.gamma, cfg.gamma_minus_one
    eps_n = corner_precession(cfg.speed, cfg.sides, cfg.c)
    step = 1.0 + f_phase(cfg.turn_angle, g, g1)

    total = cfg.sides * cmath.phase(step)
    modulus = math.exp(cfg.sides * math.log(abs(step)))

    limit = -2.0 * math.pi * g1 / g
    result = PrecessionResult(
        speed=cfg.speed,
        sides=cfg.sides,
        gamma=g,
        eps_per_corner=eps_n,
        total=total,
        limit=limit,
        omega_ratio=-g1 / g,
        gap=abs(total - limit),
        phase_modulus=modulus,
        thomas_prefactor=g / (1.0 + g),
    )
    logger.info(
        f"Orbit v={cfg.speed} n={cfg.sides}: total={total:.12g}, "
        f"limit={limit:.12g}, gap={result.gap:.3e}"
    )
    return result


def refinement_ladder(
    speed: float, start: int = 8, doublings: int = 6, c: float = DEFAULT_C
) -> List[PrecessionResult]:
    """
    Orbit results for n = start, 2 start, 4 start, ...

    The gap to the limit should shrink at every doubling; a non-monotone
    ladder is logged, not raised.
    """
    results = [
        total_precession(OrbitConfig(speed, start * 2 ** step, c))
        for step in range(doublings + 1)
    ]
    gaps = [r.gap for r in results]
    if any(later >= earlier for earlier, later in zip(gaps, gaps[1:])):
        logger.warning(f"⚠️ Refinement ladder at v={speed} is not monotone: {gaps}")
    return results


@dataclass(frozen=True)
class ThomasFrequency:
    """
    Thomas precession angular velocity of a circular orbit.

    omega = a/v is the orbital angular velocity and omega_t = -((g-1)/g) omega.
    """

    speed: float
    accel: float
    gamma: float
    omega: float
    omega_t: float
    prefactor: float
    c: float = DEFAULT_C

    def vector(self, accel_vec, vel_vec) -> np.ndarray:
        """
        Vector form (g/(1+g)) (a x v)/c^2.

        Args:
            accel_vec: acceleration, perpendicular to the velocity
            vel_vec: velocity with this orbit's speed
        """
        a = np.asarray(accel_vec, dtype=float).reshape(3)
        v = vel_vec.array if isinstance(vel_vec, BallVec) else np.asarray(vel_vec, dtype=float).reshape(3)
        return self.prefactor * np.cross(a, v) / (self.c * self.c)


def thomas_frequency(speed: float, accel: float, c: float = DEFAULT_C) -> ThomasFrequency:
    """
    Thomas precession frequency for uniform circular motion.

    Args:
        speed: orbital speed in (0, c)
        accel: centripetal acceleration magnitude, >= 0
        c: ball radius

    Returns:
        ThomasFrequency: scalar omega_t and the vector-form prefactor g/(1+g),
            which tends to 1/2 (the Thomas half) as speed -> 0

    Raises:
        BadOrbit: on speed outside (0, c) or negative acceleration
    """
    if not 0.0 < speed < c:
        raise BadOrbit(f"orbital speed must lie in (0, c={c}), got {speed}")
    if accel < 0.0:
        raise BadOrbit(f"acceleration magnitude must be >= 0, got {accel}")

    g = gamma_of_speed(speed, c)
    g1 = gamma_minus_one(g, speed, c)
    omega = accel / speed
    return ThomasFrequency(
        speed=speed,
        accel=accel,
        gamma=g,
        omega=omega,
        omega_t=-(g1 / g) * omega,
        prefactor=g / (1.0 + g),
        c=c,
    )

