"""
Full property audit.

Collects the gyrogroup law residuals together with the boost composition,
gyrotriangle defect, metric tensor, Thomas angle and sign opposition checks
into one table with a pass/fail verdict per row.
"""

import logging
import math
from typing import Dict, Optional

import numpy as np
import pandas as pd

from .ball_core import (
    BallVec,
    EinsteinBall,
    einstein_add,
    gamma,
    gamma_identity,
    k_fold_add,
    k_fold_closed_form,
    scalar_mul,
)
from .config import DEFAULT_TOL
from .exceptions import GyroError
from .gyration_engine import (
    LawResidual,
    angle_from_composites,
    angle_from_gammas,
    cos_theta_from_gammas,
    einstein_add_omega,
    gyr_closed_form,
    gyration_angle,
    gyro_law_audit,
    is_parallel,
    mcfarlane_one_plus_cos,
    orientation_normal,
    precession_angles,
    rotation_from_axis_angle,
    tan_half_squared,
)
from .hyperbolic_geometry import (
    GyroTriangle,
    defect,
    gyration_defect_angle,
    metric_consistency,
    metric_tensor,
)
from .lorentz import boost_composition_check, boost_matrix, minkowski_residual
from .sign_corroboration import sign_sweep

logger = logging.getLogger(__name__)

# relative error of the second-order line element at step 1e-4
METRIC_THRESHOLD = 1e-4
METRIC_STEP = 1e-4

AUDIT_COLUMNS = ["law", "max_residual", "samples", "threshold", "passed"]


def _record(report: Dict[str, LawResidual], law: str, residual: float) -> None:
    report.setdefault(law, LawResidual(law)).record(residual)


def _guarded(report: Dict[str, LawResidual], law: str, check) -> None:
    try:
        residual = check()
    except GyroError as e:
        logger.warning(f"⚠️ {law}: {e}")
        residual = math.inf
    _record(report, law, residual)


def ball_core_checks(u: BallVec, v: BallVec, report: Dict[str, LawResidual]) -> None:
    """Second code paths for Einstein addition and scalar multiplication."""
    _guarded(report, "omega_addition", lambda: float(
        np.max(np.abs(einstein_add_omega(u, v).array - einstein_add(u, v).array))
    ))
    _guarded(report, "k_fold_closed_form", lambda: float(
        np.max(np.abs(k_fold_add(3, u).array - k_fold_closed_form(3, u).array))
    ))
    _guarded(report, "k_fold_scalar_multiple", lambda: float(
        np.max(np.abs(k_fold_add(3, u).array - scalar_mul(3, u).array))
    ))


def angle_checks(u: BallVec, v: BallVec, report: Dict[str, LawResidual]) -> None:
    """Agreement of every Thomas angle path on one sampled pair."""
    if u.is_zero() or v.is_zero() or is_parallel(u, v):
        return
    angles = precession_angles(u, v)
    if angles.degenerate:
        return
    cos_g, sin_g = angle_from_gammas(u, v)
    cos_c, sin_c = angle_from_composites(u, v)
    rotation = gyr_closed_form(u, v)
    extracted = gyration_angle(u, v, rotation=rotation)
    guv = gamma_identity(u, v)

    _record(report, "angle_k_vs_gammas", max(abs(angles.cos_eps - cos_g), abs(angles.sin_eps - sin_g)))
    _record(report, "angle_k_vs_composites", max(abs(angles.cos_eps - cos_c), abs(angles.sin_eps - sin_c)))
    _record(report, "angle_k_vs_matrix", abs(math.atan2(angles.sin_eps, angles.cos_eps) - extracted))
    _record(report, "theta_from_gammas", abs(math.cos(angles.theta) - cos_theta_from_gammas(u, v)))
    _record(report, "angle_unit_circle", abs(angles.cos_eps ** 2 + angles.sin_eps ** 2 - 1.0))
    _record(report, "mcfarlane_identity", abs(1.0 + angles.cos_eps - mcfarlane_one_plus_cos(gamma(u), gamma(v), guv)))
    _record(report, "tan_half_angle", abs(
        (angles.sin_half / angles.cos_half) ** 2 - tan_half_squared(gamma(u), gamma(v), guv)
    ))
    _record(report, "epsilon_below_pi", 0.0 if 1.0 + angles.cos_eps > 0.0 else math.inf)
    opposite = math.copysign(1.0, angles.sin_eps) == -math.copysign(1.0, math.sin(angles.theta))
    _record(report, "sign_opposition", 0.0 if opposite else math.inf)

    axis = orientation_normal(u, v)
    rebuilt = rotation_from_axis_angle(axis, angles.epsilon)
    _record(report, "axis_angle_reconstruction", rebuilt.distance(rotation))


def boost_checks(u: BallVec, v: BallVec, report: Dict[str, LawResidual]) -> None:
    residuals = boost_composition_check(u, v)
    _record(report, "boost_composition_left", residuals.left)
    _record(report, "boost_composition_right", residuals.right)
    _record(report, "boost_minkowski", minkowski_residual(boost_matrix(u).matrix, u.c))


def defect_checks(ball: EinsteinBall, rng: np.random.Generator, max_speed: float,
                  report: Dict[str, LawResidual]) -> None:
    """tan^2 of the gyration angle against tan^2 of half the defect."""
    vertices = ball.sample_many(rng, 3, max_speed)

    def gap() -> float:
        triangle = GyroTriangle(*vertices)
        half_defect = math.tan(defect(triangle) / 2.0) ** 2
        half_gyration = math.tan(gyration_defect_angle(triangle) / 2.0) ** 2
        return abs(half_defect - half_gyration)

    _guarded(report, "defect_gyration_identity", gap)


def metric_checks(c: float, report: Dict[str, LawResidual]) -> Dict[str, LawResidual]:
    """Metric tensor against the exact line element on a polar grid, r <= 0.9c."""
    metric = {
        "metric_line_element": LawResidual("metric_line_element"),
        "metric_positive_definite": LawResidual("metric_positive_definite"),
    }
    origin = metric_tensor(0.0, 0.0, c)
    _record(report, "metric_origin_euclidean", max(abs(origin.e - 1.0), abs(origin.f), abs(origin.g - 1.0)))

    for radius in np.linspace(0.0, 0.9, 10):
        for heading in np.linspace(0.0, 2.0 * math.pi, 12, endpoint=False):
            x1, x2 = radius * c * math.cos(heading), radius * c * math.sin(heading)
            metric["metric_line_element"].record(metric_consistency(x1, x2, METRIC_STEP * c, c))
            tensor = metric_tensor(x1, x2, c)
            metric["metric_positive_definite"].record(0.0 if tensor.is_positive_definite() else math.inf)
    return metric


def run_audit(
    samples: int,
    seed: int = 0,
    max_speed: float = 0.95,
    c: float = 1.0,
    tol: float = DEFAULT_TOL,
    ball: Optional[EinsteinBall] = None,
) -> pd.DataFrame:
    """
    Run every property check and tabulate the worst residual per law.

    Args:
        samples: sampled inputs per family of checks, >= 1
        seed: seed for every random draw
        max_speed: largest sampled speed as a fraction of c
        c: ball radius
        tol: pass threshold for the algebraic identities
        ball: optional ball context (overrides c and tol)

    Returns:
        pd.DataFrame: columns law, max_residual, samples, threshold, passed
    """
    if samples < 1:
        raise GyroError(f"an audit needs at least 1 sample, got {samples}")
    ball = ball or EinsteinBall(c, tol)
    report = gyro_law_audit(samples, seed, max_speed, ball)

    rng = np.random.default_rng(seed + 1)
    for _ in range(samples):
        u, v = ball.sample_many(rng, 2, max_speed)
        ball_core_checks(u, v, report)
        try:
            angle_checks(u, v, report)
            boost_checks(u, v, report)
        except GyroError as e:
            logger.warning(f"⚠️ Sample rejected: {e}")
            _record(report, "sampling", math.inf)
        defect_checks(ball, rng, max_speed, report)

    sweep = sign_sweep(samples, seed, ball.c, max_speed)
    _record(report, "sign_check_residual", float(sweep["residual"].max()))
    exceptions = int((~sweep["opposite_signs"].astype(bool)).sum())
    _record(report, "sign_check_exceptions", math.inf if exceptions else 0.0)

    metric = metric_checks(ball.c, report)

    rows = [
        {**entry.to_dict(), "threshold": ball.tol}
        for entry in report.values()
    ]
    rows += [{**entry.to_dict(), "threshold": METRIC_THRESHOLD} for entry in metric.values()]

    frame = pd.DataFrame(rows, columns=AUDIT_COLUMNS[:-1])
    frame["passed"] = frame["max_residual"] <= frame["threshold"]
    frame = frame.sort_values("law", kind="stable").reset_index(drop=True)

    failed = int((~frame["passed"]).sum())
    if failed:
        logger.warning(f"❌ Audit: {failed} of {len(frame)} laws exceed their threshold")
    else:
        logger.info(f"✅ Audit: all {len(frame)} laws within threshold")
    return frame
