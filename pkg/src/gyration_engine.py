"""
Gyration Engine

Gyrations gyr[u,v] computed three independent ways (from Einstein addition,
from the explicit A/B/D coefficients, and from the Omega matrix), the Thomas
precession angle formulas, and the gyrogroup law audit.

Angles are signed against a reference normal (default +z): theta is positive
when the turn from u to v is counterclockwise seen from the tip of the
normal. When u x v is perpendicular to the reference normal the orientation
of u x v itself is used.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .ball_core import (
    BallVec,
    EinsteinBall,
    check_same_radius,
    coadd,
    coadd_sub,
    einstein_add,
    einstein_sub,
    gamma,
    gamma_identity,
    gamma_minus_one,
    proper_speed,
    scalar_einstein_add,
    scalar_mul,
)
from .exceptions import AxisNotFixed, GyroError, ZeroVector

logger = logging.getLogger(__name__)

# u and v count as parallel when |u x v| <= PARALLEL_EPS |u||v|
PARALLEL_EPS = 1e-14
# |sin theta| at or below this is treated as sin theta = 0
DEGENERATE_SIN = 1e-12
Z_AXIS = np.array([0.0, 0.0, 1.0])

Vector = Union[BallVec, np.ndarray, Sequence[float]]


def _as_array(w: Vector) -> np.ndarray:
    if isinstance(w, BallVec):
        return w.array
    return np.asarray(w, dtype=float).reshape(3)


def is_parallel(u: BallVec, v: BallVec) -> bool:
    """True when u or v is zero or the two are (anti)parallel."""
    if u.is_zero() or v.is_zero():
        return True
    cross = np.cross(u.array / u.norm, v.array / v.norm)
    return float(np.linalg.norm(cross)) <= PARALLEL_EPS


@dataclass(frozen=True)
class Rotation3:
    """A proper rotation of 3-space stored as a 3x3 matrix."""

    matrix: np.ndarray

    @classmethod
    def identity(cls) -> "Rotation3":
        return cls(np.eye(3))

    def apply(self, w: Vector) -> Union[BallVec, np.ndarray]:
        """
        Rotate a vector.

        BallVec inputs return a BallVec in the same ball; any other 3-vector
        (gyrations act linearly on all of R^3) returns an ndarray.
        """
        image = self.matrix @ _as_array(w)
        if isinstance(w, BallVec):
            return BallVec.from_array(image, w.c)
        return image

    def inverse(self) -> "Rotation3":
        return Rotation3(self.matrix.T.copy())

    def compose(self, other: "Rotation3") -> "Rotation3":
        return Rotation3(self.matrix @ other.matrix)

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))

    def orthogonality_residual(self) -> float:
        return float(np.max(np.abs(self.matrix.T @ self.matrix - np.eye(3))))

    def determinant_residual(self) -> float:
        return abs(float(np.linalg.det(self.matrix)) - 1.0)

    def trace_identity_residual(self) -> float:
        """Max entry of M^3 - tr(M) M^2 + tr(M) M - I."""
        m = self.matrix
        tr = self.trace
        m2 = m @ m
        return float(np.max(np.abs(m2 @ m - tr * m2 + tr * m - np.eye(3))))

    def distance(self, other: "Rotation3") -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))


@dataclass(frozen=True)
class OmegaMatrix:
    """The antisymmetric matrix Omega(a, b) with Omega x = (a x b) x x."""

    a: np.ndarray
    b: np.ndarray

    @property
    def omega(self) -> np.ndarray:
        return np.cross(self.a, self.b)

    @property
    def matrix(self) -> np.ndarray:
        return np.outer(self.b, self.a) - np.outer(self.a, self.b)

    def apply(self, x: Vector) -> np.ndarray:
        return self.matrix @ _as_array(x)

    def cube_residual(self) -> float:
        """Max entry of Omega^3 + |a x b|^2 Omega."""
        m = self.matrix
        return float(np.max(np.abs(m @ m @ m + float(self.omega @ self.omega) * m)))


@dataclass(frozen=True)
class PrecessionAngles:
    """Generating angle theta and Thomas angle epsilon for a pair u, v."""

    theta: float
    epsilon: float
    k: float
    omega_theta: float
    cos_eps: float
    sin_eps: float
    cos_half: float
    sin_half: float
    degenerate: bool = False


def omega_matrix(u: BallVec, v: BallVec) -> OmegaMatrix:
    check_same_radius(u, v)
    return OmegaMatrix(u.array, v.array)


def einstein_add_omega(u: BallVec, v: BallVec) -> BallVec:
    """
    Einstein addition written with Omega(u, v).

    u ⊕ v = (u + v - (1/c^2) gamma_u/(1+gamma_u) Omega u) / (1 + u.v/c^2)
    """
    c = check_same_radius(u, v)
    gu = gamma(u)
    uv = float(u.array @ v.array) / (c * c)
    om = omega_matrix(u, v).apply(u)
    total = (u.array + v.array - gu / (1.0 + gu) * om / (c * c)) / (1.0 + uv)
    return BallVec.from_array(total, c)


def gyr_definitional(u: BallVec, v: BallVec, w: BallVec) -> BallVec:
    """
    gyr[u,v]w from Einstein addition alone: ⊖(u⊕v) ⊕ (u ⊕ (v⊕w)).

    Args:
        u, v: generating velocities
        w: velocity being rotated

    Returns:
        BallVec: the gyrated velocity
    """
    check_same_radius(u, v, w)
    return einstein_add(-einstein_add(u, v), einstein_add(u, einstein_add(v, w)))


def gyr_closed_form(u: BallVec, v: BallVec) -> Rotation3:
    """
    Matrix of w -> w + (A u + B v) / D.

    A and B are linear in w, so the map is assembled from outer products:
    A = a1 (u.w) + a2 (v.w), B = b1 (u.w) + b2 (v.w), D = gamma_{u⊕v} + 1.
    """
    c = check_same_radius(u, v)
    if is_parallel(u, v):
        return Rotation3.identity()

    ua, va = u.array, v.array
    gu, gv = gamma(u), gamma(v)
    gu1 = gamma_minus_one(gu, u.norm, c)
    gv1 = gamma_minus_one(gv, v.norm, c)
    c2 = c * c
    uv = float(ua @ va)

    a1 = -(gu * gu / (gu + 1.0)) * gv1 / c2
    a2 = gu * gv / c2 + 2.0 * (gu * gu * gv * gv) / ((gu + 1.0) * (gv + 1.0)) * uv / (c2 * c2)
    b1 = -gu * gv / c2
    b2 = -(gv / (gv + 1.0)) * gu1 * gv / c2
    d = gu * gv * (1.0 + uv / c2) + 1.0

    coupling = np.outer(ua, a1 * ua + a2 * va) + np.outer(va, b1 * ua + b2 * va)
    return Rotation3(np.eye(3) + coupling / d)


def alpha_beta(u: BallVec, v: BallVec) -> Tuple[float, float]:
    """
    Coefficients of gyr[u,v] = I + alpha Omega + beta Omega^2.

    Returns:
        Tuple[float, float]: alpha < 0 and beta > 0
    """
    c = check_same_radius(u, v)
    gu, gv = gamma(u), gamma(v)
    guv = gamma_identity(u, v)
    denom = (1.0 + gu) * (1.0 + gv) * (1.0 + guv)
    alpha = -(gu * gv * (1.0 + gu + gv + guv)) / (denom * c * c)
    beta = (gu * gu * gv * gv) / (denom * c ** 4)
    return alpha, beta


def alpha_beta_residual(u: BallVec, v: BallVec) -> float:
    """|alpha^2 + [u^2 v^2 - (u.v)^2] beta^2 - 2 beta|."""
    alpha, beta = alpha_beta(u, v)
    cross_sq = u.squared_norm * v.squared_norm - float(u.array @ v.array) ** 2
    return abs(alpha * alpha + cross_sq * beta * beta - 2.0 * beta)


def gyr_matrix_form(u: BallVec, v: BallVec) -> Rotation3:
    """gyr[u,v] = I + alpha Omega + beta Omega^2."""
    if is_parallel(u, v):
        return Rotation3.identity()
    alpha, beta = alpha_beta(u, v)
    om = omega_matrix(u, v).matrix
    return Rotation3(np.eye(3) + alpha * om + beta * om @ om)


def rotation_from_axis_angle(axis: Vector, angle: float) -> Rotation3:
    """
    Rotation by a signed angle about an axis (right-hand rule).

    R = I + sin(angle) K + (1 - cos(angle)) K^2, K x = n x x.
    """
    n = _as_array(axis)
    length = float(np.linalg.norm(n))
    if length == 0.0:
        raise ZeroVector("rotation axis must be non-zero")
    n = n / length
    k = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    return Rotation3(np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * k @ k)


def rotation_angle_about_axis(
    rotation: Rotation3, axis: Vector, tol: float = 1e-10
) -> float:
    """
    Signed rotation angle about a known axis.

    Args:
        rotation: the rotation to measure
        axis: unit axis fixed by the rotation
        tol: allowed drift of the axis under the rotation

    Returns:
        float: angle in (-pi, pi]

    Raises:
        AxisNotFixed: if |R axis - axis| > tol
    """
    n = _as_array(axis)
    n = n / float(np.linalg.norm(n))
    drift = float(np.linalg.norm(rotation.matrix @ n - n))
    if drift > tol:
        raise AxisNotFixed(f"axis moves by {drift:.3e} under the rotation")

    # any vector orthogonal to the axis works as a probe
    probe = np.cross(n, np.eye(3)[int(np.argmin(np.abs(n)))])
    probe /= float(np.linalg.norm(probe))
    image = rotation.matrix @ probe
    return math.atan2(float(n @ np.cross(probe, image)), float(probe @ image))


def orientation_normal(u: BallVec, v: BallVec, normal: Vector = Z_AXIS) -> np.ndarray:
    """
    Unit rotation axis unit(u x v), flipped to agree with the reference normal.

    Raises:
        ZeroVector: if u and v are parallel (no axis)
    """
    if is_parallel(u, v):
        raise ZeroVector("parallel velocities do not span a plane")
    cross = np.cross(u.array / u.norm, v.array / v.norm)
    length = float(np.linalg.norm(cross))
    axis = cross / length
    if float(axis @ _as_array(normal)) < 0.0:
        axis = -axis
    return axis


def generating_angle(u: BallVec, v: BallVec, normal: Vector = Z_AXIS) -> float:
    """
    Signed angle theta from u to v in (-pi, pi].

    Raises:
        ZeroVector: if u or v is zero
    """
    if u.is_zero() or v.is_zero():
        raise ZeroVector("the generating angle needs two non-zero velocities")
    ua, va = u.array / u.norm, v.array / v.norm
    cross = np.cross(ua, va)
    sign = -1.0 if float(cross @ _as_array(normal)) < 0.0 else 1.0
    return math.atan2(sign * float(np.linalg.norm(cross)), float(ua @ va))


def velocity_parameter(u: BallVec, v: BallVec) -> float:
    """
    k > 1 with k^2 = ((gamma_u+1)/(gamma_u-1)) ((gamma_v+1)/(gamma_v-1)).

    Evaluated as (gamma_u+1)(gamma_v+1) / (sqrt(gamma_u^2-1) sqrt(gamma_v^2-1)).
    """
    c = check_same_radius(u, v)
    if u.is_zero() or v.is_zero():
        raise ZeroVector("k is undefined for a zero velocity")
    gu, gv = gamma(u), gamma(v)
    return (gu + 1.0) * (gv + 1.0) / (proper_speed(gu, u.norm, c) * proper_speed(gv, v.norm, c))


def cos_theta_from_gammas(u: BallVec, v: BallVec) -> float:
    """cos theta = (gamma_{u⊕v} - gamma_u gamma_v) / (sqrt(gamma_u^2-1) sqrt(gamma_v^2-1))."""
    c = check_same_radius(u, v)
    if u.is_zero() or v.is_zero():
        raise ZeroVector("the generating angle needs two non-zero velocities")
    gu, gv = gamma(u), gamma(v)
    guv = gamma(einstein_add(u, v))
    return (guv - gu * gv) / (proper_speed(gu, u.norm, c) * proper_speed(gv, v.norm, c))


def epsilon_from_k(k: float, theta: float) -> Tuple[float, float]:
    """
    Thomas angle from the velocity parameter k and the generating angle.

    Returns:
        Tuple[float, float]: (cos eps, sin eps)
    """
    s, co = math.sin(theta), math.cos(theta)
    if abs(s) <= DEGENERATE_SIN:
        return 1.0, 0.0
    shifted = k + co
    denom = shifted * shifted + s * s
    return (shifted * shifted - s * s) / denom, -2.0 * shifted * s / denom


def half_angles_from_k(k: float, theta: float) -> Tuple[float, float]:
    """(cos eps/2, sin eps/2) with cos > 0 and sin opposite to sin theta."""
    s, co = math.sin(theta), math.cos(theta)
    root = math.sqrt((k + co) ** 2 + s * s)
    return (k + co) / root, -s / root


def epsilon_from_gamma_pair(
    gu: float, gv: float, pu: float, pv: float, theta: float,
    gu1: Optional[float] = None, gv1: Optional[float] = None,
) -> Tuple[float, float]:
    """
    Thomas angle from the two gammas and theta.

    Args:
        gu, gv: gamma factors
        pu, pv: sqrt(gamma^2 - 1) for each velocity
        theta: signed generating angle
        gu1, gv1: gamma - 1 if already known accurately

    Returns:
        Tuple[float, float]: (cos eps, sin eps)
    """
    gu1 = gu - 1.0 if gu1 is None else gu1
    gv1 = gv - 1.0 if gv1 is None else gv1
    s, co = math.sin(theta), math.cos(theta)
    if abs(s) <= DEGENERATE_SIN:
        return 1.0, 0.0
    guv = gu * gv + pu * pv * co
    cos_eps = 1.0 - gu1 * gv1 / (guv + 1.0) * s * s
    sin_eps = -(pu * pv + gu1 * gv1 * co) / (guv + 1.0) * s
    return cos_eps, sin_eps


def epsilon_equal_speeds(g: float, theta: float, g1: Optional[float] = None) -> Tuple[float, float]:
    """
    Thomas angle when both velocities share the gamma factor g.

    Returns:
        Tuple[float, float]: (cos eps, sin eps)
    """
    g1 = g - 1.0 if g1 is None else g1
    s, co = math.sin(theta), math.cos(theta)
    g2m1 = g1 * (g + 1.0)
    denom = (g * g + 1.0) + g2m1 * co
    return 1.0 - g1 * g1 * s * s / denom, -(g2m1 + g1 * g1 * co) / denom * s


def angle_from_gammas(u: BallVec, v: BallVec, normal: Vector = Z_AXIS) -> Tuple[float, float]:
    """
    (cos eps, sin eps) from gamma_u, gamma_v and theta.

    gamma_{u⊕v} is rebuilt from gamma_u gamma_v + sqrt(gamma_u^2-1)
    sqrt(gamma_v^2-1) cos theta rather than from the sum itself.
    """
    c = check_same_radius(u, v)
    theta = generating_angle(u, v, normal)
    gu, gv = gamma(u), gamma(v)
    return epsilon_from_gamma_pair(
        gu, gv,
        proper_speed(gu, u.norm, c), proper_speed(gv, v.norm, c),
        theta,
        gamma_minus_one(gu, u.norm, c), gamma_minus_one(gv, v.norm, c),
    )


def angle_from_composites(u: BallVec, v: BallVec, normal: Vector = Z_AXIS) -> Tuple[float, float]:
    """
    (cos eps, sin eps) read from u⊕v and v⊕u directly.

    gyr[u,v] turns v⊕u into u⊕v; the sine is signed by the reference
    orientation of the turn.
    """
    uv = einstein_add(u, v).array
    vu = einstein_add(v, u).array
    sq = float(uv @ uv)
    if sq == 0.0:
        return 1.0, 0.0
    cross = np.cross(vu, uv)
    sign = -1.0 if float(cross @ _as_array(normal)) < 0.0 else 1.0
    return float(uv @ vu) / sq, sign * float(np.linalg.norm(cross)) / sq


def mcfarlane_one_plus_cos(gu: float, gv: float, guv: float) -> float:
    """1 + cos eps = (1+gu+gv+guv)^2 / ((1+gu)(1+gv)(1+guv))."""
    return (1.0 + gu + gv + guv) ** 2 / ((1.0 + gu) * (1.0 + gv) * (1.0 + guv))


def tan_half_squared(gu: float, gv: float, guv: float) -> float:
    """tan^2(eps/2) = (1 + 2 gu gv guv - gu^2 - gv^2 - guv^2) / (1+gu+gv+guv)^2."""
    radicand = 1.0 + 2.0 * gu * gv * guv - gu * gu - gv * gv - guv * guv
    return max(radicand, 0.0) / (1.0 + gu + gv + guv) ** 2


def precession_angles(u: BallVec, v: BallVec, normal: Vector = Z_AXIS) -> PrecessionAngles:
    """
    Generating angle, velocity parameter and Thomas angle for u, v.

    Args:
        u, v: non-zero velocities
        normal: reference normal fixing the orientation

    Returns:
        PrecessionAngles: degenerate=True (and eps = 0) when sin theta = 0

    Raises:
        ZeroVector: if u or v is zero
    """
    theta = generating_angle(u, v, normal)
    k = velocity_parameter(u, v)
    omega_theta = u.norm * v.norm * math.sin(theta)

    if is_parallel(u, v) or abs(math.sin(theta)) <= DEGENERATE_SIN:
        return PrecessionAngles(
            theta=theta, epsilon=0.0, k=k, omega_theta=0.0,
            cos_eps=1.0, sin_eps=0.0, cos_half=1.0, sin_half=0.0,
            degenerate=True,
        )

    cos_eps, sin_eps = epsilon_from_k(k, theta)
    cos_half, sin_half = half_angles_from_k(k, theta)

    check_cos, check_sin = angle_from_gammas(u, v, normal)
    drift = max(abs(check_cos - cos_eps), abs(check_sin - sin_eps))
    if drift > 1e-8:
        logger.warning(f"⚠️ Thomas angle formulas disagree by {drift:.3e}")

    return PrecessionAngles(
        theta=theta,
        epsilon=math.atan2(sin_eps, cos_eps),
        k=k,
        omega_theta=omega_theta,
        cos_eps=cos_eps,
        sin_eps=sin_eps,
        cos_half=cos_half,
        sin_half=sin_half,
    )


def gyration_angle(
    u: BallVec,
    v: BallVec,
    normal: Vector = Z_AXIS,
    tol: float = 1e-10,
    rotation: Optional[Rotation3] = None,
) -> float:
    """
    Signed angle of gyr[u,v] about the oriented axis of u x v (0 if parallel).

    rotation may pass in an already computed gyr[u,v].
    """
    if is_parallel(u, v):
        return 0.0
    rotation = rotation if rotation is not None else gyr_closed_form(u, v)
    return rotation_angle_about_axis(rotation, orientation_normal(u, v, normal), tol)


# ---------------------------------------------------------------------------
# Gyrogroup law audit
# ---------------------------------------------------------------------------


@dataclass
class LawResidual:
    """Running maximum of one law's residual over the sampled inputs."""

    law: str
    max_residual: float = 0.0
    samples: int = 0
    failures: List[str] = field(default_factory=list)

    def record(self, residual: float) -> None:
        self.samples += 1
        if math.isnan(residual):
            residual = math.inf
        self.max_residual = max(self.max_residual, residual)

    def passed(self, tol: float) -> bool:
        return self.max_residual <= tol

    def to_dict(self) -> Dict:
        return {"law": self.law, "max_residual": self.max_residual, "samples": self.samples}


def _vec_gap(a: Vector, b: Vector) -> float:
    return float(np.max(np.abs(_as_array(a) - _as_array(b))))


def _law_checks(
    u: BallVec, v: BallVec, w: BallVec, x: BallVec, rng_scalars: Sequence[float]
) -> Dict[str, Callable[[], float]]:
    """Residual thunks for every law on one sampled quadruple."""
    g_uv = gyr_closed_form(u, v)
    zero = BallVec.zero(u.c)
    eye = Rotation3.identity()
    r1, r2 = rng_scalars
    wide = np.array([r1, r2, r1 - r2]) * 3.0

    return {
        # named laws of Einstein addition
        "gyrocommutative": lambda: _vec_gap(einstein_add(u, v), g_uv.apply(einstein_add(v, u))),
        "left_gyroassociative": lambda: _vec_gap(
            einstein_add(u, einstein_add(v, w)), einstein_add(einstein_add(u, v), g_uv.apply(w))
        ),
        "right_gyroassociative": lambda: _vec_gap(
            einstein_add(einstein_add(u, v), w),
            einstein_add(u, einstein_add(v, gyr_closed_form(v, u).apply(w))),
        ),
        "left_loop": lambda: gyr_closed_form(einstein_add(u, v), v).distance(g_uv),
        "right_loop": lambda: gyr_closed_form(u, einstein_add(v, u)).distance(g_uv),
        "even": lambda: gyr_closed_form(-u, -v).distance(g_uv),
        "inversion": lambda: Rotation3(np.linalg.inv(g_uv.matrix)).distance(gyr_closed_form(v, u)),
        # gyrations as isometric linear automorphisms
        "inner_product_invariance": lambda: abs(
            float(g_uv.apply(w).array @ g_uv.apply(x).array) - float(w.array @ x.array)
        ),
        "norm_invariance": lambda: abs(g_uv.apply(w).norm - w.norm),
        "automorphism": lambda: _vec_gap(
            g_uv.apply(einstein_add(w, x)), einstein_add(g_uv.apply(w), g_uv.apply(x))
        ),
        "linearity": lambda: _vec_gap(
            g_uv.apply(r1 * w.array + r2 * wide), r1 * g_uv.apply(w.array) + r2 * g_uv.apply(wide)
        ),
        # three code paths for the same gyration
        "definitional_vs_closed_form": lambda: _vec_gap(gyr_definitional(u, v, w), g_uv.apply(w)),
        "closed_form_vs_matrix_form": lambda: gyr_matrix_form(u, v).distance(g_uv),
        "trace_identity": lambda: g_uv.trace_identity_residual(),
        "orthogonality": lambda: g_uv.orthogonality_residual(),
        "determinant": lambda: g_uv.determinant_residual(),
        "axis_fixed": lambda: _vec_gap(
            g_uv.apply(np.cross(u.array, v.array)), np.cross(u.array, v.array)
        ),
        "alpha_beta_constraint": lambda: 0.0 if is_parallel(u, v) else alpha_beta_residual(u, v),
        "alpha_beta_signs": lambda: 0.0 if is_parallel(u, v) else max(0.0, alpha_beta(u, v)[0], -alpha_beta(u, v)[1]),
        # first gyrogroup properties
        "left_identity": lambda: _vec_gap(einstein_add(zero, u), u),
        "right_identity": lambda: _vec_gap(einstein_add(u, zero), u),
        "left_inverse": lambda: _vec_gap(einstein_add(-u, u), zero),
        "right_inverse": lambda: _vec_gap(einstein_sub(u, u), zero),
        "double_inverse": lambda: _vec_gap(-(-u), u),
        "gyr_zero_left_trivial": lambda: gyr_closed_form(zero, u).distance(eye),
        "gyr_self_trivial": lambda: gyr_closed_form(u, u).distance(eye),
        "gyr_zero_right_trivial": lambda: gyr_closed_form(u, zero).distance(eye),
        "gyr_left_inverse_trivial": lambda: gyr_closed_form(-u, u).distance(eye),
        "left_cancellation": lambda: _vec_gap(einstein_add(-u, einstein_add(u, v)), v),
        "gyrator_identity": lambda: _vec_gap(
            einstein_add(-einstein_add(u, v), einstein_add(u, einstein_add(v, w))), g_uv.apply(w)
        ),
        "gyr_fixes_zero": lambda: _vec_gap(g_uv.apply(zero), zero),
        "gyr_commutes_with_inverse": lambda: _vec_gap(g_uv.apply(-w), -g_uv.apply(w)),
        # ball core identities
        "gamma_identity": lambda: abs(gamma(einstein_add(u, v)) - gamma_identity(u, v)),
        "automorphic_inverse": lambda: _vec_gap(-einstein_add(u, v), einstein_add(-u, -v)),
        "norm_gamma_identity": lambda: abs(
            u.squared_norm / u.c ** 2 - (gamma(u) ** 2 - 1.0) / gamma(u) ** 2
        ),
        "gyrotriangle_inequality": lambda: max(
            0.0, einstein_add(u, v).norm - scalar_einstein_add(u.norm, v.norm, u.c)
        ),
        "scalar_distributivity": lambda: _vec_gap(
            scalar_mul(abs(r1) + abs(r2), u),
            einstein_add(scalar_mul(abs(r1), u), scalar_mul(abs(r2), u)),
        ),
        "coaddition_commutative": lambda: _vec_gap(coadd(u, v), coadd(v, u)),
        "coaddition_dual": lambda: _vec_gap(einstein_add(u, v), coadd(u, g_uv.apply(v))),
        "right_cancellation_coaddition": lambda: _vec_gap(coadd_sub(einstein_add(v, u), u), v),
        "right_cancellation_addition": lambda: _vec_gap(einstein_sub(coadd(v, u), u), v),
    }


def gyro_law_audit(
    samples: int,
    seed: int = 0,
    max_speed: float = 0.95,
    ball: Optional[EinsteinBall] = None,
) -> Dict[str, LawResidual]:
    """
    Audit every gyrogroup law over seeded random samples.

    Args:
        samples: number of sampled quadruples (0 gives an empty report)
        seed: seed for numpy's default generator
        max_speed: largest sampled speed as a fraction of c
        ball: ball context (unit ball by default)

    Returns:
        Dict[str, LawResidual]: law name -> max residual over the samples
    """
    ball = ball or EinsteinBall()
    report: Dict[str, LawResidual] = {}
    if samples <= 0:
        return report

    rng = np.random.default_rng(seed)
    logger.info(f"Auditing gyrogroup laws over {samples} samples (seed={seed})")

    for index in range(samples):
        u, v, w, x = ball.sample_many(rng, 4, max_speed)
        scalars = rng.uniform(-1.5, 1.5, size=2)
        try:
            checks = _law_checks(u, v, w, x, scalars)
        except GyroError as e:
            logger.warning(f"⚠️ Sample {index} rejected: {e}")
            report.setdefault("sampling", LawResidual("sampling")).record(math.inf)
            continue

        for law, check in checks.items():
            entry = report.setdefault(law, LawResidual(law))
            try:
                entry.record(check())
            except GyroError as e:
                entry.record(math.inf)
                entry.failures.append(f"sample {index}: {e}")

    worst = max(report.values(), key=lambda r: r.max_residual)
    logger.info(f"✅ Gyrogroup audit done: {len(report)} laws, worst {worst.law}={worst.max_residual:.3e}")
    return report
