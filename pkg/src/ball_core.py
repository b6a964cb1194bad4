"""
Einstein Ball Core

The open c-ball of relativistically admissible velocities together with
Einstein addition, subtraction, scalar multiplication, coaddition and the
gamma factor. Every other module builds on these operations.
"""

import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import List, NewType, Sequence

import numpy as np

from .config import DEFAULT_C, DEFAULT_TOL
from .exceptions import GyroError, MixedRadius, OutOfBall

logger = logging.getLogger(__name__)

# A Lorentz factor, always >= 1.
Gamma = NewType("Gamma", float)

# Relative margin below c that a BallVec must respect.
BOUNDARY_MARGIN = 1e-15


@dataclass(frozen=True)
class BallVec:
    """A velocity strictly inside the ball of radius c."""

    x: float
    y: float
    z: float
    c: float = DEFAULT_C

    def __post_init__(self):
        for name in ("x", "y", "z", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))

        if not all(math.isfinite(value) for value in (self.x, self.y, self.z, self.c)):
            raise OutOfBall(f"non-finite velocity components: {self.tolist()}")
        if self.c <= 0.0:
            raise OutOfBall(f"ball radius must be positive, got {self.c}")

        limit = self.c * (1.0 - BOUNDARY_MARGIN)
        if self.squared_norm >= limit * limit:
            raise OutOfBall(
                f"velocity {self.tolist()} has speed {self.norm!r} "
                f"which is not inside the ball of radius {self.c!r}"
            )

    @classmethod
    def from_array(cls, components: Sequence[float], c: float = DEFAULT_C) -> "BallVec":
        """
        Build a BallVec from 2 or 3 components.

        Args:
            components: x, y[, z]; two components are zero-extended to 3-D
            c: ball radius

        Returns:
            BallVec: validated velocity
        """
        values = np.asarray(components, dtype=float).ravel()
        if values.size == 2:
            values = np.append(values, 0.0)
        if values.size != 3:
            raise GyroError(f"expected 2 or 3 components, got {values.size}")
        return cls(values[0], values[1], values[2], c)

    @classmethod
    def zero(cls, c: float = DEFAULT_C) -> "BallVec":
        return cls(0.0, 0.0, 0.0, c)

    @property
    def array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def squared_norm(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z

    @property
    def norm(self) -> float:
        # hypot does not underflow for tiny components
        return math.hypot(self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def tolist(self) -> List[float]:
        return [self.x, self.y, self.z]

    def __neg__(self) -> "BallVec":
        return BallVec(-self.x, -self.y, -self.z, self.c)


def check_same_radius(*vectors: BallVec) -> float:
    """
    Return the common radius of the operands.

    Raises:
        MixedRadius: if the operands live in balls of different radius
    """
    radii = {v.c for v in vectors}
    if len(radii) != 1:
        raise MixedRadius(f"operands carry different ball radii: {sorted(radii)}")
    return vectors[0].c


def gamma_of_speed(speed: float, c: float = DEFAULT_C) -> Gamma:
    """Lorentz factor for a scalar speed."""
    ratio = (speed / c) ** 2
    if not ratio < 1.0:
        raise OutOfBall(f"speed {speed!r} is not below c = {c!r}")
    return Gamma(1.0 / math.sqrt(1.0 - ratio))


def gamma_minus_one(g: float, speed: float, c: float = DEFAULT_C) -> float:
    """
    Evaluate gamma - 1 without cancellation.

    Uses gamma - 1 = gamma^2 (speed/c)^2 / (gamma + 1), which stays accurate
    for speeds where gamma rounds to 1.
    """
    return g * g * (speed / c) ** 2 / (g + 1.0)


def proper_speed(g: float, speed: float, c: float = DEFAULT_C) -> float:
    """sqrt(gamma^2 - 1), evaluated as gamma * speed / c."""
    return g * speed / c


def gamma(v: BallVec) -> Gamma:
    """
    Lorentz factor of a ball velocity.

    Args:
        v: velocity inside the ball

    Returns:
        Gamma: 1 / sqrt(1 - |v|^2 / c^2)
    """
    return gamma_of_speed(v.norm, v.c)


def _add_arrays(u: np.ndarray, v: np.ndarray, c: float) -> np.ndarray:
    uv = float(u @ v) / (c * c)
    gu = 1.0 / math.sqrt(1.0 - float(u @ u) / (c * c))
    return (u + v / gu + (gu / (1.0 + gu)) * uv * u) / (1.0 + uv)


def einstein_add(u: BallVec, v: BallVec) -> BallVec:
    """
    Einstein velocity addition u ⊕ v.

    Args:
        u: first velocity
        v: second velocity, same ball radius as u

    Returns:
        BallVec: the relativistic composite velocity
    """
    c = check_same_radius(u, v)
    return BallVec.from_array(_add_arrays(u.array, v.array, c), c)


def einstein_sub(u: BallVec, v: BallVec) -> BallVec:
    """Einstein subtraction u ⊖ v = u ⊕ (-v)."""
    return einstein_add(u, -v)


def gamma_identity(u: BallVec, v: BallVec) -> Gamma:
    """
    Gamma factor of u ⊕ v computed without forming the sum.

    Returns:
        Gamma: gamma_u * gamma_v * (1 + u.v / c^2)
    """
    c = check_same_radius(u, v)
    return Gamma(gamma(u) * gamma(v) * (1.0 + float(u.array @ v.array) / (c * c)))


def gamma_identity_negated(u: BallVec, v: BallVec) -> Gamma:
    """Gamma factor of ⊖u ⊕ v, i.e. gamma_u gamma_v (1 - u.v / c^2)."""
    return gamma_identity(-u, v)


def scalar_einstein_add(a: float, b: float, c: float = DEFAULT_C) -> float:
    """Einstein addition of two collinear speeds, (a + b) / (1 + ab/c^2)."""
    return (a + b) / (1.0 + a * b / (c * c))


def scalar_mul(r: float, v: BallVec) -> BallVec:
    """
    Einstein scalar multiplication r ⊗ v.

    Args:
        r: any real scalar
        v: velocity inside the ball

    Returns:
        BallVec: c tanh(r atanh(|v|/c)) v/|v|, and 0 for v = 0
    """
    speed = v.norm
    if speed == 0.0:
        return BallVec.zero(v.c)

    radius = v.c * math.tanh(r * math.atanh(speed / v.c))
    # tanh saturates at 1.0 in double precision for large arguments
    ceiling = v.c * (1.0 - 2.0 * BOUNDARY_MARGIN)
    radius = max(-ceiling, min(ceiling, radius))
    return BallVec.from_array(radius * (v.array / speed), v.c)


def k_fold_add(k: int, v: BallVec) -> BallVec:
    """Einstein sum of k copies of v, v ⊕ v ⊕ ... ⊕ v (left to right)."""
    if k < 1:
        raise GyroError(f"k-fold addition needs k >= 1, got {k}")
    return reduce(einstein_add, [v] * (k - 1), v)


def k_fold_closed_form(k: int, v: BallVec) -> BallVec:
    """
    Closed form of k copies of v.

    Returns:
        BallVec: c ((1+s)^k - (1-s)^k) / ((1+s)^k + (1-s)^k) v/|v|, s = |v|/c
    """
    speed = v.norm
    if speed == 0.0:
        return BallVec.zero(v.c)
    s = speed / v.c
    plus, minus = (1.0 + s) ** k, (1.0 - s) ** k
    return BallVec.from_array(v.c * (plus - minus) / (plus + minus) * (v.array / speed), v.c)


def coadd(u: BallVec, v: BallVec) -> BallVec:
    """
    Einstein coaddition u ⊞ v = u ⊕ gyr[u, ⊖v] v.

    Coaddition is commutative, unlike Einstein addition.
    """
    # gyration_engine depends on this module
    from .gyration_engine import gyr_closed_form

    check_same_radius(u, v)
    return einstein_add(u, gyr_closed_form(u, -v).apply(v))


def coadd_sub(u: BallVec, v: BallVec) -> BallVec:
    """Cosubtraction u ⊟ v = u ⊞ (⊖v)."""
    return coadd(u, -v)


class EinsteinBall:
    """
    Context object for a ball of fixed radius.

    Builds BallVecs with its radius, draws reproducible random samples and
    compares vectors against its tolerance.
    """

    def __init__(self, c: float = DEFAULT_C, tol: float = DEFAULT_TOL):
        if not c > 0.0:
            raise GyroError(f"ball radius must be positive, got {c}")
        if not tol > 0.0:
            raise GyroError(f"tolerance must be positive, got {tol}")
        self.c = float(c)
        self.tol = float(tol)

    def vec(self, *components: float) -> BallVec:
        """Build a BallVec in this ball from 2 or 3 components."""
        return BallVec.from_array(components, self.c)

    def zero(self) -> BallVec:
        return BallVec.zero(self.c)

    def sample(self, rng: np.random.Generator, max_speed: float = 0.95) -> BallVec:
        """
        Draw a velocity with uniform direction and uniform speed.

        Args:
            rng: seeded numpy generator
            max_speed: largest speed as a fraction of c

        Returns:
            BallVec: speed uniform in [0, max_speed * c]
        """
        direction = rng.normal(size=3)
        length = float(np.linalg.norm(direction))
        while length == 0.0:
            direction = rng.normal(size=3)
            length = float(np.linalg.norm(direction))
        speed = rng.uniform(0.0, max_speed) * self.c
        return BallVec.from_array(speed * direction / length, self.c)

    def sample_many(
        self, rng: np.random.Generator, count: int, max_speed: float = 0.95
    ) -> List[BallVec]:
        return [self.sample(rng, max_speed) for _ in range(count)]

    def distance(self, a: BallVec, b: BallVec) -> float:
        """Euclidean distance between two ball vectors."""
        return float(np.linalg.norm(a.array - b.array))

    def close(self, a: BallVec, b: BallVec) -> bool:
        return self.distance(a, b) <= self.tol


# Default unit ball for easy import
einstein_ball = EinsteinBall()
