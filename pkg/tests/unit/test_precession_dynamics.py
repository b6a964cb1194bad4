"""
Unit tests for polygonal orbit precession and the Thomas frequency.
"""

import math

import numpy as np
import pytest

from src.ball_core import BallVec
from src.exceptions import BadOrbit
from src.precession_dynamics import (
    MAX_SIDES,
    OrbitConfig,
    corner_precession,
    f_phase,
    f_prime_zero,
    f_prime_zero_numeric,
    refinement_ladder,
    thomas_frequency,
    total_precession,
)


class TestOrbitConfig:
    """Test orbit parameter validation."""

    @pytest.mark.parametrize("speed, sides", [(0.6, 2), (0.6, 0), (0.6, 3.5), (0.0, 8), (1.0, 8), (-0.2, 8)])
    def test_rejects_bad_orbits(self, speed, sides):
        """Test that n < 3, non-integer n and speeds outside (0, c) raise BadOrbit."""
        with pytest.raises(BadOrbit):
            OrbitConfig(speed, sides)

    def test_rejects_oversized_orbits(self):
        """Test that more than MAX_SIDES sides raise BadOrbit."""
        with pytest.raises(BadOrbit):
            OrbitConfig(0.6, MAX_SIDES + 1)

    def test_rejects_boolean_sides(self):
        """Test that a bool is not accepted as a side count."""
        with pytest.raises(BadOrbit):
            OrbitConfig(0.5, True)

    def test_derived_values(self):
        """Test turn angle and gamma factors."""
        cfg = OrbitConfig(0.6, 4)
        assert cfg.turn_angle == pytest.approx(math.pi / 2)
        assert cfg.gamma == pytest.approx(1.25)
        assert cfg.gamma_minus_one == pytest.approx(0.25)


class TestCornerPrecession:
    """Test the Thomas angle at one polygon corner."""

    def test_square_orbit(self):
        """Test that a quarter turn at 0.6 c precesses by the 40/41 angle, negatively."""
        eps = corner_precession(0.6, 4)
        assert eps == pytest.approx(math.atan2(-9.0 / 41.0, 40.0 / 41.0), abs=1e-14)
        assert eps < 0.0

    def test_slow_orbit(self):
        """Test that a nearly Newtonian orbit barely precesses."""
        assert corner_precession(1e-8, 4) == pytest.approx(0.0, abs=1e-15)

    def test_phase_has_unit_modulus(self):
        """Test |1 + f(phi)| = 1."""
        for phi in (0.1, 1.0, 2.0, 3.0):
            assert abs(1.0 + f_phase(phi, 2.0)) == pytest.approx(1.0, abs=1e-14)

    def test_derivative_at_zero(self):
        """Test the central difference against f'(0) = -i (g-1)/g."""
        for g in (1.25, 2.0, 10.0):
            assert f_prime_zero(g) == pytest.approx(complex(0.0, -(g - 1.0) / g))
            assert abs(f_prime_zero_numeric(g) - f_prime_zero(g)) <= 1e-8

    @pytest.mark.parametrize("g", [1.25, 2.0, 10.0])
    def test_continuous_at_zero(self, g):
        """Test f(0) = 0 and |f(phi)| <= K |phi| near 0."""
        assert f_phase(0.0, g) == 0.0
        bound = 2.0 * (g - 1.0) / g
        for phi in (1e-1, 1e-3, -1e-3, 1e-6, -1e-9):
            assert abs(f_phase(phi, g)) <= bound * abs(phi)


class TestTotalPrecession:
    """Test accumulated precession over one revolution."""

    def test_square_total(self):
        """Test that four corners give four times the corner angle."""
        result = total_precession(OrbitConfig(0.6, 4))
        assert result.total == pytest.approx(4.0 * result.eps_per_corner, abs=1e-13)

    def test_limit_values(self):
        """Test the limit -2 pi (g-1)/g = -0.4 pi and the ratio -0.2 at 0.6 c."""
        result = total_precession(OrbitConfig(0.6, 1000))
        assert result.limit == pytest.approx(-0.4 * math.pi, abs=1e-14)
        assert result.omega_ratio == pytest.approx(-0.2, abs=1e-15)
        assert result.thomas_prefactor == pytest.approx(1.25 / 2.25)

    @pytest.mark.slow
    def test_many_sided_orbit_converges(self):
        """Test that n = 100000 lands within 1e-3 of the limit."""
        result = total_precession(OrbitConfig(0.6, 100_000))
        assert result.gap <= 1e-3
        assert result.phase_modulus == pytest.approx(1.0, abs=1e-9)

    def test_billion_sided_orbit(self):
        """Test the largest accepted orbit without building per-corner arrays."""
        result = total_precession(OrbitConfig(0.6, MAX_SIDES))
        assert result.gap <= 1e-6
        assert result.phase_modulus == pytest.approx(1.0, abs=1e-6)

    def test_total_is_unwrapped(self):
        """Test that totals beyond -pi are not reduced mod 2 pi."""
        result = total_precession(OrbitConfig(0.99, 64))
        assert result.total < -math.pi
        assert result.gap < 1.0

    def test_refinement_ladder_is_monotone(self):
        """Test that each doubling of n moves closer to the limit."""
        gaps = [r.gap for r in refinement_ladder(0.6, start=8, doublings=4)]
        assert len(gaps) == 5
        assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))


class TestThomasFrequency:
    """Test the Thomas precession angular velocity."""

    def test_scalar_form(self):
        """Test omega_t = -0.2 omega at 0.6 c with a/v = 1."""
        freq = thomas_frequency(0.6, 0.6)
        assert freq.omega == pytest.approx(1.0)
        assert freq.omega_t == pytest.approx(-0.2, abs=1e-15)

    def test_thomas_half(self):
        """Test that the vector prefactor tends to 1/2 at low speed."""
        assert thomas_frequency(1e-4, 1.0).prefactor == pytest.approx(0.5, abs=1e-8)

    def test_vector_form(self):
        """Test (g/(1+g)) (a x v) / c^2 for a circular orbit."""
        freq = thomas_frequency(0.6, 0.6)
        vector = freq.vector([0.0, -0.6, 0.0], BallVec(0.6, 0.0, 0.0))
        assert np.allclose(vector, [0.0, 0.0, 0.2], atol=1e-15)

    def test_zero_acceleration(self):
        """Test that straight-line motion does not precess."""
        assert thomas_frequency(0.5, 0.0).omega_t == 0.0

    @pytest.mark.parametrize("speed, accel", [(0.0, 1.0), (1.0, 1.0), (0.5, -1.0)])
    def test_rejects_bad_input(self, speed, accel):
        """Test BadOrbit on speeds outside (0, c) and negative acceleration."""
        with pytest.raises(BadOrbit):
            thomas_frequency(speed, accel)
