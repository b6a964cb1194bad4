"""
Command-line interface for gyrokinematics.

Every computation in the package is reachable from the terminal. Reports go
to stdout as JSON (or CSV for tabular output); diagnostics go to stderr.

Usage:
    gyrokin add --u 0.6,0,0 --v 0,0.6,0
    gyrokin angle --u 0.6,0 --v 0,0.6
    gyrokin sweep --k 1.001 --k 2 --samples 361
    gyrokin orbit --speed 0.6 --sides 100000
    gyrokin audit --samples 1000 --max-speed 0.95
    gyrokin sign-check --u 0.6,0 --theta 1.5707963 --ratio 1

Exit codes: 0 success, 1 a checked property failed, 2 usage or input error.
"""

import functools
import logging
import sys
from typing import Tuple

import click

from .audit import run_audit
from .ball_core import BallVec
from .config import DEFAULT_C, DEFAULT_SEED, DEFAULT_TOL, RunConfig, configure_logging
from .exceptions import GyroError
from .reports import (
    add_report,
    angle_report,
    boost_check_report,
    defect_report,
    gyrate_report,
    metric_report,
    midpoint_report,
    orbit_report,
    render,
    render_frame,
    sign_check_report,
)
from .sign_corroboration import angle_sweep, sign_check

__all__ = [
    "cli",
    "main",
]

logger = logging.getLogger(__name__)

EXIT_VIOLATION = 1
EXIT_USAGE = 2


class VectorParam(click.ParamType):
    """Comma-separated reals with 2 or 3 components, e.g. 0.6,0,0."""

    name = "vector"

    def convert(self, value, param, ctx) -> Tuple[float, ...]:
        if isinstance(value, tuple):
            return value
        try:
            components = tuple(float(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of numbers", param, ctx)
        if len(components) not in (2, 3):
            self.fail(f"{value!r} needs 2 or 3 components, got {len(components)}", param, ctx)
        if len(components) == 2:
            components += (0.0,)
        return components


VECTOR = VectorParam()


def handle_errors(command):
    """Translate domain errors into exit code 2 with a one-line message."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except GyroError as e:
            logger.error(f"❌ {type(e).__name__}: {e}")
            click.echo(f"Error: {type(e).__name__}: {e}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


def _vec(config: RunConfig, components: Tuple[float, ...]) -> BallVec:
    return BallVec.from_array(components, config.c)


def _echo(text: str) -> None:
    click.echo(text if text.endswith("\n") else text + "\n", nl=False)


def _emit(config: RunConfig, report: dict, default: str = "json") -> None:
    _echo(render(report, config.format_for(default)))


@click.group()
@click.version_option(version="0.1.0", prog_name="gyrokin")
@click.option("--c", "c", type=click.FloatRange(min=0.0, min_open=True), default=DEFAULT_C,
              show_default=True, help="Ball radius (speed of light)")
@click.option("--tol", type=click.FloatRange(min=0.0, min_open=True), default=DEFAULT_TOL,
              show_default=True, help="Pass threshold for residual checks")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True,
              help="Seed for every random draw")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default=None,
              help="Output format (default: csv for sweep, json otherwise)")
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
@click.pass_context
def cli(ctx, c: float, tol: float, seed: int, output_format: str, verbose: bool):
    """
    Einstein velocity addition, gyrations and Thomas precession.

    Examples:

        gyrokin add --u 0.6,0,0 --v 0,0.6,0

        gyrokin --format csv sweep --k 1.5 --samples 9

        gyrokin audit --samples 1000
    """
    configure_logging(verbose)
    ctx.obj = RunConfig(c=c, tol=tol, seed=seed, output_format=output_format, verbose=verbose)


@cli.command()
@click.option("--u", "u", type=VECTOR, required=True, help="First velocity")
@click.option("--v", "v", type=VECTOR, required=True, help="Second velocity")
@click.pass_obj
@handle_errors
def add(config: RunConfig, u, v):
    """
    Einstein sum in both orders, coaddition and gamma factors.

    Examples:

        gyrokin add --u 0.6,0,0 --v 0,0.6,0
    """
    _emit(config, add_report(_vec(config, u), _vec(config, v)))


@cli.command()
@click.option("--u", "u", type=VECTOR, required=True)
@click.option("--v", "v", type=VECTOR, required=True)
@click.option("--w", "w", type=VECTOR, required=True, help="Velocity to rotate")
@click.pass_obj
@handle_errors
def gyrate(config: RunConfig, u, v, w):
    """Apply gyr[u,v] to w and cross-check the three gyration paths."""
    _emit(config, gyrate_report(_vec(config, u), _vec(config, v), _vec(config, w)))


@cli.command()
@click.option("--u", "u", type=VECTOR, required=True)
@click.option("--v", "v", type=VECTOR, required=True)
@click.option("--normal", type=VECTOR, default="0,0,1", show_default=True,
              help="Reference normal fixing the sign of theta")
@click.pass_obj
@handle_errors
def angle(config: RunConfig, u, v, normal):
    """Generating angle theta and Thomas angle epsilon for u, v."""
    _emit(config, angle_report(_vec(config, u), _vec(config, v), normal))


@cli.command()
@click.option("--k", "k_values", type=float, multiple=True, required=True,
              help="Velocity parameter k > 1 (repeatable)")
@click.option("--samples", type=int, default=361, show_default=True,
              help="Grid points on [0, 2 pi]")
@click.pass_obj
@handle_errors
def sweep(config: RunConfig, k_values, samples: int):
    """
    cos(epsilon) and -sin(epsilon) against theta for each k.

    Examples:

        gyrokin sweep --k 1.001 --k 1.5 --k 5
    """
    frame = angle_sweep(k_values, samples)
    _echo(render_frame(frame, config.format_for("csv")))


@cli.command()
@click.option("--speed", type=float, required=True, help="Uniform orbital speed")
@click.option("--sides", type=int, required=True, help="Polygon sides n >= 3")
@click.option("--accel", type=float, default=None,
              help="Centripetal acceleration (default: the speed, so a/v = 1)")
@click.pass_obj
@handle_errors
def orbit(config: RunConfig, speed: float, sides: int, accel):
    """Thomas precession of a regular polygonal orbit."""
    _emit(config, orbit_report(speed, sides, config.c, accel))


@cli.command("boost-check")
@click.option("--u", "u", type=VECTOR, required=True)
@click.option("--v", "v", type=VECTOR, required=True)
@click.pass_obj
@handle_errors
def boost_check(config: RunConfig, u, v):
    """Check B(u)B(v) = B(u⊕v)Gyr[u,v] = Gyr[u,v]B(v⊕u)."""
    report = boost_check_report(_vec(config, u), _vec(config, v), config.tol)
    _emit(config, report)
    if not report["passed"]:
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--samples", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--max-speed", type=click.FloatRange(min=0.0, max=1.0, max_open=True),
              default=0.95, show_default=True, help="Largest sampled speed as a fraction of c")
@click.pass_obj
@handle_errors
def audit(config: RunConfig, samples: int, max_speed: float):
    """
    Audit every algebraic law and identity on seeded random samples.

    Exits 1 when any law exceeds its threshold.
    """
    frame = run_audit(samples, config.seed, max_speed, config.c, config.tol)
    _echo(render_frame(frame, config.format_for("json")))
    if not frame["passed"].all():
        sys.exit(EXIT_VIOLATION)


@cli.command("sign-check")
@click.option("--u", "u", type=VECTOR, required=True, help="Planar velocity")
@click.option("--theta", type=float, required=True, help="Signed generating angle")
@click.option("--ratio", type=float, default=1.0, show_default=True, help="||v|| / ||u||")
@click.option("--w", "w", type=VECTOR, default="0.1,0.2,0", show_default=True, help="Probe velocity")
@click.option("--allow-degenerate", is_flag=True, help="Report instead of failing when sin(theta) = 0")
@click.pass_obj
@handle_errors
def sign_check_command(config: RunConfig, u, theta: float, ratio: float, w, allow_degenerate: bool):
    """
    Certify that epsilon and theta have opposite signs.

    Examples:

        gyrokin sign-check --u 0.6,0 --theta 1.5707963 --ratio 1 --w 0.1,0.2
    """
    report = sign_check(_vec(config, u), theta, ratio, _vec(config, w), allow_degenerate)
    _emit(config, sign_check_report(report))
    if report.applicable and (not report.opposite_signs or report.residual > config.tol):
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--a", "a", type=VECTOR, required=True)
@click.option("--b", "b", type=VECTOR, required=True)
@click.pass_obj
@handle_errors
def midpoint(config: RunConfig, a, b):
    """Gyromidpoint of A and B by both formulas."""
    _emit(config, midpoint_report(_vec(config, a), _vec(config, b)))


@cli.command()
@click.option("--u", "u", type=VECTOR, required=True, help="Vertex U")
@click.option("--v", "v", type=VECTOR, required=True, help="Vertex V")
@click.option("--w", "w", type=VECTOR, required=True, help="Vertex W")
@click.pass_obj
@handle_errors
def defect(config: RunConfig, u, v, w):
    """Defect of the gyrotriangle UVW and the matching gyration angle."""
    _emit(config, defect_report(_vec(config, u), _vec(config, v), _vec(config, w)))


@cli.command()
@click.option("--x1", type=float, required=True)
@click.option("--x2", type=float, required=True)
@click.option("--step", type=float, default=1e-4, show_default=True,
              help="Finite-difference step for the line element check")
@click.pass_obj
@handle_errors
def metric(config: RunConfig, x1: float, x2: float, step: float):
    """Metric tensor E, F, G of the disc at (x1, x2)."""
    _emit(config, metric_report(x1, x2, config.c, step))


def main() -> None:
    cli(prog_name="gyrokin")


if __name__ == "__main__":
    main()
