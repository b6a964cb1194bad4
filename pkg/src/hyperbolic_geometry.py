"""
Beltrami-Klein Geometry

Ball-model primitives induced by Einstein addition: gyrodistance, gyrolines
(which are Euclidean chords of the ball), gyromidpoints, gyrotriangles with
their defect, and the metric tensor of the disc.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .ball_core import (
    BallVec,
    check_same_radius,
    coadd,
    einstein_add,
    einstein_sub,
    gamma,
    scalar_mul,
)
from .config import DEFAULT_C
from .exceptions import CoincidentAnchors, DegenerateTriangle, GyroError
from .gyration_engine import (
    gyr_closed_form,
    is_parallel,
    orientation_normal,
    rotation_angle_about_axis,
)

logger = logging.getLogger(__name__)

# defect radicands above -RADICAND_CLAMP are rounding noise and clamp to 0
RADICAND_CLAMP = 1e-12


def gyrodistance(u: BallVec, v: BallVec) -> float:
    """Einstein gyrodistance ||u ⊖ v||."""
    return einstein_sub(u, v).norm


def euclidean_distance(a: BallVec, b: BallVec) -> float:
    return float(np.linalg.norm(a.array - b.array))


def euclidean_line_point(a: BallVec, b: BallVec, t: float) -> BallVec:
    """Point A + (B - A) t of the Euclidean line through A and B."""
    c = check_same_radius(a, b)
    return BallVec.from_array(a.array + (b.array - a.array) * t, c)


def chord_collinearity_residual(a: BallVec, b: BallVec, p: BallVec) -> float:
    """Euclidean distance from p to the line through a and b."""
    direction = b.array - a.array
    length = float(np.linalg.norm(direction))
    if length == 0.0:
        raise CoincidentAnchors("a chord needs two distinct anchor points")
    return float(np.linalg.norm(np.cross(direction, p.array - a.array))) / length


@dataclass(frozen=True)
class GyroLine:
    """
    The gyroline A ⊕ (⊖A ⊕ B) ⊗ t through two distinct points.

    t = 0 gives A, t = 1 gives B and t in [0, 1] traces the gyrosegment.
    """

    a: BallVec
    b: BallVec

    def __post_init__(self):
        check_same_radius(self.a, self.b)
        if self.a == self.b:
            raise CoincidentAnchors(f"gyroline anchors coincide at {self.a.tolist()}")

    @property
    def direction(self) -> BallVec:
        return einstein_add(-self.a, self.b)

    def point(self, t: float) -> BallVec:
        return einstein_add(self.a, scalar_mul(t, self.direction))

    def points(self, ts: Sequence[float]) -> List[BallVec]:
        return [self.point(t) for t in ts]

    def midpoint(self) -> BallVec:
        return self.point(0.5)

    def chord_residual(self, p: BallVec) -> float:
        return chord_collinearity_residual(self.a, self.b, p)


def gyroline_point(a: BallVec, b: BallVec, t: float) -> BallVec:
    """
    Point of the gyroline through A and B at parameter t.

    Raises:
        CoincidentAnchors: if A = B
    """
    return GyroLine(a, b).point(t)


def gyroline_segment(a: BallVec, b: BallVec, count: int = 11) -> List[BallVec]:
    """Evenly parameterized samples of the gyrosegment, t in [0, 1]."""
    if count < 2:
        raise GyroError(f"a segment needs at least 2 samples, got {count}")
    return GyroLine(a, b).points(np.linspace(0.0, 1.0, count))


def gyromidpoint(a: BallVec, b: BallVec) -> BallVec:
    """
    Gyromidpoint A ⊕ (⊖A ⊕ B) ⊗ 1/2.

    Defined for A = B as well (returns A).
    """
    check_same_radius(a, b)
    return einstein_add(a, scalar_mul(0.5, einstein_add(-a, b)))


def gyromidpoint_coadd(a: BallVec, b: BallVec) -> BallVec:
    """Gyromidpoint from coaddition, 1/2 ⊗ (A ⊞ B)."""
    return scalar_mul(0.5, coadd(a, b))


@dataclass(frozen=True)
class GyroTriangle:
    """
    A gyrotriangle with vertices U, V, W.

    Side gyrovectors are u = ⊖W ⊕ V, v = ⊖W ⊕ U and w = ⊖U ⊕ V.
    """

    u_vertex: BallVec
    v_vertex: BallVec
    w_vertex: BallVec

    def __post_init__(self):
        check_same_radius(self.u_vertex, self.v_vertex, self.w_vertex)

    @property
    def sides(self) -> Tuple[BallVec, BallVec, BallVec]:
        u = einstein_add(-self.w_vertex, self.v_vertex)
        v = einstein_add(-self.w_vertex, self.u_vertex)
        w = einstein_add(-self.u_vertex, self.v_vertex)
        return u, v, w

    @property
    def gammas(self) -> Tuple[float, float, float]:
        u, v, w = self.sides
        return gamma(u), gamma(v), gamma(w)

    @property
    def side_lengths(self) -> Tuple[float, float, float]:
        u, v, w = self.sides
        return u.norm, v.norm, w.norm

    def radicand(self) -> float:
        gu, gv, gw = self.gammas
        return 1.0 + 2.0 * gu * gv * gw - gu * gu - gv * gv - gw * gw

    def defect(self) -> float:
        return defect(self)


def defect(triangle: GyroTriangle) -> float:
    """
    Defect of a gyrotriangle from its side gamma factors.

    tan(delta/2) = sqrt(1 + 2 gu gv gw - gu^2 - gv^2 - gw^2) / (1 + gu + gv + gw)

    Args:
        triangle: the gyrotriangle

    Returns:
        float: delta in [0, pi)

    Raises:
        DegenerateTriangle: if the radicand is below -1e-12
    """
    radicand = triangle.radicand()
    if radicand < 0.0:
        if radicand < -RADICAND_CLAMP:
            raise DegenerateTriangle(f"defect radicand {radicand:.3e} is negative")
        logger.warning(f"⚠️ Clamping defect radicand {radicand:.3e} to 0")
        radicand = 0.0

    gu, gv, gw = triangle.gammas
    return 2.0 * math.atan(math.sqrt(radicand) / (1.0 + gu + gv + gw))


def gyration_defect_angle(triangle: GyroTriangle, tol: float = 1e-10) -> float:
    """
    Rotation angle of gyr[u, ⊖v] for the triangle's sides u, v.

    Its half-angle tangent squared equals that of the defect. Returns 0 when
    the two sides are parallel.
    """
    u, v, _ = triangle.sides
    if is_parallel(u, -v):
        return 0.0
    return rotation_angle_about_axis(gyr_closed_form(u, -v), orientation_normal(u, -v), tol)


@dataclass(frozen=True)
class MetricTensor2:
    """Metric tensor E, F, G of the Beltrami-Klein disc at (x1, x2)."""

    e: float
    f: float
    g: float
    x1: float
    x2: float
    c: float = DEFAULT_C

    @property
    def determinant(self) -> float:
        return self.e * self.g - self.f * self.f

    def is_positive_definite(self) -> bool:
        return self.e > 0.0 and self.g > 0.0 and self.determinant > 0.0

    def quadratic_form(self, dx1: float, dx2: float) -> float:
        """ds^2 = E dx1^2 + 2F dx1 dx2 + G dx2^2."""
        return self.e * dx1 * dx1 + 2.0 * self.f * dx1 * dx2 + self.g * dx2 * dx2

    def matrix(self) -> np.ndarray:
        return np.array([[self.e, self.f], [self.f, self.g]])


def metric_tensor(x1: float, x2: float, c: float = DEFAULT_C) -> MetricTensor2:
    """
    Metric tensor of the disc at (x1, x2).

    Args:
        x1, x2: point inside the disc of radius c
        c: disc radius

    Returns:
        MetricTensor2: E = c^2 (c^2 - x2^2)/(c^2 - r^2)^2,
            F = c^2 x1 x2/(c^2 - r^2)^2, G = c^2 (c^2 - x1^2)/(c^2 - r^2)^2

    Raises:
        OutOfBall: if r >= c
    """
    point = BallVec(x1, x2, 0.0, c)
    c2 = c * c
    scale = c2 / (c2 - point.squared_norm) ** 2
    return MetricTensor2(
        e=scale * (c2 - point.y * point.y),
        f=scale * point.x * point.y,
        g=scale * (c2 - point.x * point.x),
        x1=point.x,
        x2=point.y,
        c=c,
    )


def line_element(x1: float, x2: float, dx1: float, dx2: float, c: float = DEFAULT_C) -> float:
    """Exact squared line element ||(x + dx) ⊖ x||^2."""
    x = BallVec(x1, x2, 0.0, c)
    moved = BallVec(x1 + dx1, x2 + dx2, 0.0, c)
    return einstein_sub(moved, x).squared_norm


def symmetric_line_element(x1: float, x2: float, dx1: float, dx2: float, c: float = DEFAULT_C) -> float:
    """Average of the line element over dx and -dx; the cubic term cancels."""
    forward = line_element(x1, x2, dx1, dx2, c)
    backward = line_element(x1, x2, -dx1, -dx2, c)
    return 0.5 * (forward + backward)


def metric_consistency(x1: float, x2: float, step: float = 1e-4, c: float = DEFAULT_C) -> float:
    """
    Largest relative gap between the line element and the metric's quadratic form.

    Probes the two axis directions and both diagonals at the given step.
    """
    tensor = metric_tensor(x1, x2, c)
    diag = step / math.sqrt(2.0)
    worst = 0.0
    for dx1, dx2 in ((step, 0.0), (0.0, step), (diag, diag), (diag, -diag)):
        exact = symmetric_line_element(x1, x2, dx1, dx2, c)
        worst = max(worst, abs(exact - tensor.quadratic_form(dx1, dx2)) / exact)
    return worst
