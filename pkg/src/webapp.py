"""
Gyrokinematics Web API

A FastAPI JSON surface over the same reports the command line prints:
Einstein addition, gyrations, polygonal orbits, the sign experiment and the
property audit.
"""

import logging
from datetime import datetime
from typing import List, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .audit import run_audit
from .ball_core import BallVec
from .config import DEFAULT_C, DEFAULT_SEED, DEFAULT_TOL
from .exceptions import GyroError
from .precession_dynamics import MAX_SIDES
from .reports import jsonable, add_report, gyrate_report, orbit_report, sign_check_report
from .sign_corroboration import sign_check

logger = logging.getLogger(__name__)

VERSION = "0.1.0"

app = FastAPI(
    title="Gyrokinematics",
    description="Einstein velocity addition, gyrations and Thomas precession",
    version=VERSION,
)


class BallRequest(BaseModel):
    c: float = Field(default=DEFAULT_C, gt=0.0)

    def vec(self, components: List[float]) -> BallVec:
        return BallVec.from_array(components, self.c)


class AddRequest(BallRequest):
    u: List[float]
    v: List[float]


class GyrateRequest(AddRequest):
    w: List[float]


class OrbitRequest(BaseModel):
    speed: float
    sides: int = Field(le=MAX_SIDES)
    accel: Optional[float] = None
    c: float = Field(default=DEFAULT_C, gt=0.0)


class SignCheckRequest(BallRequest):
    u: List[float]
    theta: float
    ratio: float = 1.0
    w: List[float] = [0.1, 0.2, 0.0]
    allow_degenerate: bool = False


class AuditRequest(BaseModel):
    samples: int = Field(default=100, ge=1, le=5000)
    seed: int = DEFAULT_SEED
    max_speed: float = Field(default=0.95, gt=0.0, lt=1.0)
    c: float = Field(default=DEFAULT_C, gt=0.0)
    tol: float = Field(default=DEFAULT_TOL, gt=0.0)


def _success(payload: dict) -> JSONResponse:
    return JSONResponse(content={"success": True, **jsonable(payload)})


@app.exception_handler(GyroError)
async def gyro_error_handler(request: Request, exc: GyroError):
    logger.error(f"❌ {request.url.path}: {type(exc).__name__}: {exc}")
    return JSONResponse(
        content={"success": False, "error": str(exc), "error_type": type(exc).__name__},
        status_code=422,
    )


@app.exception_handler(Exception)
async def unexpected_error_handler(request: Request, exc: Exception):
    logger.error(f"Unexpected error in {request.url.path}: {exc}")
    return JSONResponse(
        content={"success": False, "error": str(exc), "timestamp": datetime.now().isoformat()},
        status_code=500,
    )


@app.post("/api/add", response_class=JSONResponse)
async def add(body: AddRequest):
    """Einstein sum in both orders, coaddition and gamma factors."""
    return _success(add_report(body.vec(body.u), body.vec(body.v)))


@app.post("/api/gyrate", response_class=JSONResponse)
async def gyrate(body: GyrateRequest):
    """Apply gyr[u,v] to w."""
    return _success(gyrate_report(body.vec(body.u), body.vec(body.v), body.vec(body.w)))


@app.post("/api/orbit", response_class=JSONResponse)
async def orbit(body: OrbitRequest):
    """Thomas precession of a regular polygonal orbit."""
    return _success(orbit_report(body.speed, body.sides, body.c, body.accel))


@app.post("/api/sign-check", response_class=JSONResponse)
async def sign_check_endpoint(body: SignCheckRequest):
    """Opposite-sign verdict for the planar sign experiment."""
    report = sign_check(body.vec(body.u), body.theta, body.ratio, body.vec(body.w), body.allow_degenerate)
    return _success(sign_check_report(report))


@app.post("/api/audit", response_class=JSONResponse)
async def audit(body: AuditRequest):
    """Law-by-law residual table."""
    frame = run_audit(body.samples, body.seed, body.max_speed, body.c, body.tol)
    return _success(
        {
            "passed": bool(frame["passed"].all()),
            "laws": frame.to_dict(orient="records"),
        }
    )


@app.get("/api/status")
async def get_status():
    """Application status."""
    return {
        "status": "healthy",
        "version": VERSION,
        "endpoints": ["/api/add", "/api/gyrate", "/api/orbit", "/api/sign-check", "/api/audit"],
        "timestamp": datetime.now().isoformat(),
    }


@app.get("/health")
async def health_check():
    """Simple health check endpoint."""
    return {"status": "ok", "timestamp": datetime.now().isoformat()}
