"""
Lorentz boosts acting on spacetime events (t, x1, x2, x3), the spacetime
gyration Gyr[u,v] = diag(1, gyr[u,v]) and the two boost composition
factorizations.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .ball_core import (
    BallVec,
    check_same_radius,
    einstein_add,
    gamma,
    gamma_identity,
)
from .exceptions import GyroError
from .gyration_engine import gyr_closed_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpacetimeEvent:
    """An event (t, x); x is any 3-vector."""

    t: float
    x: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float).reshape(-1)
        if x.size == 2:
            x = np.append(x, 0.0)
        if x.size != 3:
            raise GyroError(f"an event needs 2 or 3 spatial components, got {x.size}")
        if not (np.isfinite(self.t) and np.all(np.isfinite(x))):
            raise GyroError("event components must be finite")
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "x", x)

    @classmethod
    def from_array(cls, components: Sequence[float]) -> "SpacetimeEvent":
        values = np.asarray(components, dtype=float).reshape(-1)
        return cls(values[0], values[1:])

    @property
    def array(self) -> np.ndarray:
        return np.concatenate(([self.t], self.x))

    def minkowski_form(self, c: float) -> float:
        """c^2 t^2 - ||x||^2."""
        return c * c * self.t * self.t - float(self.x @ self.x)


@dataclass(frozen=True, eq=False)
class Boost4:
    """A Lorentz boost B(v) stored as its 4x4 matrix."""

    matrix: np.ndarray
    velocity: BallVec

    def apply(self, event: SpacetimeEvent) -> SpacetimeEvent:
        return SpacetimeEvent.from_array(self.matrix @ event.array)

    def __matmul__(self, other) -> np.ndarray:
        right = other.matrix if isinstance(other, Boost4) else other
        return self.matrix @ right


def minkowski_metric(c: float) -> np.ndarray:
    return np.diag([c * c, -1.0, -1.0, -1.0])


def boost_matrix(v: BallVec, g: Optional[float] = None) -> Boost4:
    """
    4x4 matrix of the boost with velocity v.

    Args:
        v: boost velocity
        g: gamma factor of v when a more accurate value is known

    Returns:
        Boost4: [[g, g v^T/c^2], [g v, I + g^2/(g+1) v v^T/c^2]]
    """
    g = gamma(v) if g is None else g
    c2 = v.c * v.c
    va = v.array
    matrix = np.empty((4, 4))
    matrix[0, 0] = g
    matrix[0, 1:] = g * va / c2
    matrix[1:, 0] = g * va
    matrix[1:, 1:] = np.eye(3) + (g * g / (g + 1.0)) * np.outer(va, va) / c2
    return Boost4(matrix, v)


def boost_apply(u: BallVec, event: SpacetimeEvent) -> SpacetimeEvent:
    """
    Apply B(u) to an event without forming the matrix.

    t' = g (t + u.x/c^2), x' = g u t + x + g^2/(1+g) (u.x/c^2) u
    """
    g = gamma(u)
    c2 = u.c * u.c
    ua = u.array
    ux = float(ua @ event.x) / c2
    t_new = g * (event.t + ux)
    x_new = g * ua * event.t + event.x + (g * g / (1.0 + g)) * ux * ua
    return SpacetimeEvent(t_new, x_new)


def spacetime_gyr_matrix(u: BallVec, v: BallVec) -> np.ndarray:
    """Gyr[u,v] as the block matrix diag(1, gyr[u,v])."""
    matrix = np.eye(4)
    matrix[1:, 1:] = gyr_closed_form(u, v).matrix
    return matrix


def spacetime_gyr(u: BallVec, v: BallVec, event: SpacetimeEvent) -> SpacetimeEvent:
    """Gyr[u,v](t, x) = (t, gyr[u,v] x); time is untouched."""
    return SpacetimeEvent(event.t, gyr_closed_form(u, v).apply(event.x))


def minkowski_residual(matrix: np.ndarray, c: float) -> float:
    """Max entry of L^T eta L - eta, zero for a Lorentz transformation."""
    eta = minkowski_metric(c)
    return float(np.max(np.abs(matrix.T @ eta @ matrix - eta)))


@dataclass(frozen=True)
class CompositionResiduals:
    """
    Residuals of the two factorizations of B(u)B(v).

    left: B(u)B(v) = B(u⊕v) Gyr[u,v]
    right: B(u)B(v) = Gyr[u,v] B(v⊕u)
    swapped_right: the variant with Gyr[v,u] on the left, which does not
        hold for non-parallel u, v and is kept as a diagnostic
    """

    left: float
    right: float
    swapped_right: float

    def passed(self, tol: float) -> bool:
        return self.left <= tol and self.right <= tol


def boost_composition_check(u: BallVec, v: BallVec) -> CompositionResiduals:
    """
    Check both boost composition factorizations as 4x4 matrix identities.

    Args:
        u, v: boost velocities

    Returns:
        CompositionResiduals: max-entry residuals of each factorization
    """
    check_same_radius(u, v)
    product = boost_matrix(u) @ boost_matrix(v)

    # u⊕v and v⊕u share gamma_u gamma_v (1 + u.v/c^2)
    g_sum = gamma_identity(u, v)
    b_uv = boost_matrix(einstein_add(u, v), g_sum).matrix
    b_vu = boost_matrix(einstein_add(v, u), g_sum).matrix
    gyr_uv = spacetime_gyr_matrix(u, v)
    gyr_vu = spacetime_gyr_matrix(v, u)

    return CompositionResiduals(
        left=float(np.max(np.abs(product - b_uv @ gyr_uv))),
        right=float(np.max(np.abs(product - gyr_uv @ b_vu))),
        swapped_right=float(np.max(np.abs(product - gyr_vu @ b_vu))),
    )


def composition_non_closure_gap(u: BallVec, v: BallVec) -> float:
    """
    Distance from B(u)B(v) to the nearer of the pure boosts B(u⊕v), B(v⊕u).

    Positive for non-parallel u, v: two boosts compose to a boost followed
    by a rotation, never to a boost alone.
    """
    product = boost_matrix(u) @ boost_matrix(v)
    g_sum = gamma_identity(u, v)
    gaps = [
        float(np.max(np.abs(product - boost_matrix(w, g_sum).matrix)))
        for w in (einstein_add(u, v), einstein_add(v, u))
    ]
    return min(gaps)
