"""
Flat report builders shared by the command line and the HTTP API.

Every builder returns a flat dict with snake_case keys, vectors as lists and
at most one level of nesting (3x3 matrices as lists of rows).
"""

import json
import logging
import math
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from .ball_core import BallVec, coadd, einstein_add, gamma, gamma_identity
from .gyration_engine import (
    Z_AXIS,
    angle_from_composites,
    angle_from_gammas,
    gyr_closed_form,
    gyr_definitional,
    gyr_matrix_form,
    gyration_angle,
    is_parallel,
    precession_angles,
)
from .hyperbolic_geometry import (
    GyroTriangle,
    defect,
    gyration_defect_angle,
    gyrodistance,
    gyromidpoint,
    gyromidpoint_coadd,
    metric_consistency,
    metric_tensor,
)
from .lorentz import (
    boost_composition_check,
    boost_matrix,
    composition_non_closure_gap,
    minkowski_residual,
)
from .precession_dynamics import OrbitConfig, thomas_frequency, total_precession
from .sign_corroboration import SignCheckReport

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.17g"


def _max_gap(a, b) -> float:
    a = a.array if isinstance(a, BallVec) else np.asarray(a)
    b = b.array if isinstance(b, BallVec) else np.asarray(b)
    return float(np.max(np.abs(a - b)))


def add_report(u: BallVec, v: BallVec) -> Dict[str, Any]:
    """u ⊕ v, v ⊕ u, u ⊞ v and the gamma factors."""
    return {
        "u": u.tolist(),
        "v": v.tolist(),
        "u_plus_v": einstein_add(u, v).tolist(),
        "v_plus_u": einstein_add(v, u).tolist(),
        "u_coplus_v": coadd(u, v).tolist(),
        "gamma_u": gamma(u),
        "gamma_v": gamma(v),
        "gamma_u_plus_v": gamma(einstein_add(u, v)),
        "gamma_identity": gamma_identity(u, v),
    }


def gyrate_report(u: BallVec, v: BallVec, w: BallVec) -> Dict[str, Any]:
    rotation = gyr_closed_form(u, v)
    image = rotation.apply(w)
    oracle = gyr_definitional(u, v, w)
    return {
        "u": u.tolist(),
        "v": v.tolist(),
        "w": w.tolist(),
        "gyrated": image.tolist(),
        "gyrated_definitional": oracle.tolist(),
        "definitional_residual": _max_gap(image, oracle),
        "matrix_form_residual": rotation.distance(gyr_matrix_form(u, v)),
        "trace_identity_residual": rotation.trace_identity_residual(),
        "orthogonality_residual": rotation.orthogonality_residual(),
        "epsilon": gyration_angle(u, v),
        "matrix": rotation.matrix.tolist(),
    }


def angle_report(u: BallVec, v: BallVec, normal=Z_AXIS) -> Dict[str, Any]:
    """Every Thomas angle path for one pair of velocities."""
    angles = precession_angles(u, v, normal)
    report = {
        "theta": angles.theta,
        "epsilon": angles.epsilon,
        "k": angles.k,
        "omega_theta": angles.omega_theta,
        "cos_eps": angles.cos_eps,
        "sin_eps": angles.sin_eps,
        "cos_half": angles.cos_half,
        "sin_half": angles.sin_half,
        "degenerate": angles.degenerate,
    }
    if not angles.degenerate and not is_parallel(u, v):
        cos_g, sin_g = angle_from_gammas(u, v, normal)
        cos_c, sin_c = angle_from_composites(u, v, normal)
        report.update(
            cos_eps_gammas=cos_g,
            sin_eps_gammas=sin_g,
            cos_eps_composites=cos_c,
            sin_eps_composites=sin_c,
            epsilon_matrix=gyration_angle(u, v, normal),
        )
    return report


def orbit_report(speed: float, sides: int, c: float = 1.0, accel: Optional[float] = None) -> Dict[str, Any]:
    """
    Polygonal orbit precession plus the Thomas frequency.

    accel defaults to the speed itself, i.e. omega = a/v = 1.
    """
    result = total_precession(OrbitConfig(speed, sides, c))
    frequency = thomas_frequency(speed, speed if accel is None else accel, c)
    return {
        "speed": result.speed,
        "sides": result.sides,
        "gamma": result.gamma,
        "eps_per_corner": result.eps_per_corner,
        "total": result.total,
        "limit": result.limit,
        "gap": result.gap,
        "omega_ratio": result.omega_ratio,
        "phase_modulus": result.phase_modulus,
        "omega": frequency.omega,
        "omega_t": frequency.omega_t,
        "thomas_prefactor": frequency.prefactor,
    }


def boost_check_report(u: BallVec, v: BallVec, tol: float) -> Dict[str, Any]:
    residuals = boost_composition_check(u, v)
    return {
        "u": u.tolist(),
        "v": v.tolist(),
        "residual_left": residuals.left,
        "residual_right": residuals.right,
        "residual_swapped_right": residuals.swapped_right,
        "minkowski_residual_u": minkowski_residual(boost_matrix(u).matrix, u.c),
        "minkowski_residual_v": minkowski_residual(boost_matrix(v).matrix, v.c),
        "non_closure_gap": composition_non_closure_gap(u, v),
        "passed": residuals.passed(tol),
    }


def sign_check_report(report: SignCheckReport) -> Dict[str, Any]:
    return {
        **report.to_dict(),
        "cos_eps": math.cos(report.epsilon),
        "sin_eps": math.sin(report.epsilon),
    }


def midpoint_report(a: BallVec, b: BallVec) -> Dict[str, Any]:
    mid = gyromidpoint(a, b)
    mid_coadd = gyromidpoint_coadd(a, b)
    return {
        "a": a.tolist(),
        "b": b.tolist(),
        "midpoint": mid.tolist(),
        "midpoint_coaddition": mid_coadd.tolist(),
        "formula_residual": _max_gap(mid, mid_coadd),
        "distance_to_a": gyrodistance(mid, a),
        "distance_to_b": gyrodistance(mid, b),
    }


def defect_report(u_vertex: BallVec, v_vertex: BallVec, w_vertex: BallVec) -> Dict[str, Any]:
    triangle = GyroTriangle(u_vertex, v_vertex, w_vertex)
    delta = defect(triangle)
    rotation_angle = gyration_defect_angle(triangle)
    gu, gv, gw = triangle.gammas
    len_u, len_v, len_w = triangle.side_lengths
    return {
        "u_vertex": u_vertex.tolist(),
        "v_vertex": v_vertex.tolist(),
        "w_vertex": w_vertex.tolist(),
        "side_length_u": len_u,
        "side_length_v": len_v,
        "side_length_w": len_w,
        "gamma_u": gu,
        "gamma_v": gv,
        "gamma_w": gw,
        "defect": delta,
        "gyration_angle": rotation_angle,
        "identity_residual": abs(math.tan(delta / 2.0) ** 2 - math.tan(rotation_angle / 2.0) ** 2),
    }


def metric_report(x1: float, x2: float, c: float = 1.0, step: float = 1e-4) -> Dict[str, Any]:
    tensor = metric_tensor(x1, x2, c)
    return {
        "x1": x1,
        "x2": x2,
        "e": tensor.e,
        "f": tensor.f,
        "g": tensor.g,
        "determinant": tensor.determinant,
        "positive_definite": tensor.is_positive_definite(),
        "line_element_relative_error": metric_consistency(x1, x2, step, c),
    }


def jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def to_json(payload: Any) -> str:
    """One JSON document; non-finite floats become null."""
    return json.dumps(jsonable(payload), indent=2, ensure_ascii=False)


def flatten(report: Dict[str, Any]) -> Dict[str, Any]:
    """Spread vectors into <name>_x/_y/_z and matrices into <name>_<row><col>."""
    flat: Dict[str, Any] = {}
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            for i, row in enumerate(value):
                for j, entry in enumerate(row):
                    flat[f"{key}_{i}{j}"] = entry
        elif isinstance(value, list) and len(value) == 3:
            for axis, entry in zip("xyz", value):
                flat[f"{key}_{axis}"] = entry
        elif isinstance(value, list):
            for i, entry in enumerate(value):
                flat[f"{key}_{i}"] = entry
        else:
            flat[key] = value
    return flat


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")


def render(report: Dict[str, Any], fmt: str) -> str:
    """Render a flat report as JSON or a one-row CSV."""
    if fmt == "csv":
        return frame_to_csv(pd.DataFrame([flatten(report)]))
    return to_json(report)


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    """Render a table as CSV or a JSON list of records."""
    if fmt == "csv":
        return frame_to_csv(frame)
    return to_json(frame.to_dict(orient="records"))
