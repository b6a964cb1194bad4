"""
Error hierarchy for the gyrokinematics package.

Every numerical operation raises a subclass of GyroError; the CLI and the
HTTP layer translate these into exit code 2 / HTTP 422 respectively.
"""


class GyroError(ValueError):
    """Base class for all validation and domain errors."""


class OutOfBall(GyroError):
    """A velocity lies on or outside the ball of radius c."""


class MixedRadius(GyroError):
    """Two operands carry different ball radii."""


class ZeroVector(GyroError):
    """An operation needs a direction but received the zero vector."""


class Degenerate(GyroError):
    """The generating angle has sin(theta) = 0, so no sign verdict exists."""


class NotPlanar(GyroError):
    """A planar construction received a vector with a z component."""


class AxisNotFixed(GyroError):
    """The supplied axis is not fixed by the rotation."""


class CoincidentAnchors(GyroError):
    """A gyroline was requested through two identical points."""


class DegenerateTriangle(GyroError):
    """The defect radicand is negative beyond rounding noise."""


class BadOrbit(GyroError):
    """Polygonal orbit parameters are out of range."""
