"""
Unit tests for gyrations and Thomas precession angles.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings

from src.ball_core import BallVec, einstein_add, gamma, gamma_identity
from src.exceptions import AxisNotFixed, ZeroVector
from src.gyration_engine import (
    LawResidual,
    Rotation3,
    alpha_beta,
    alpha_beta_residual,
    angle_from_composites,
    angle_from_gammas,
    cos_theta_from_gammas,
    einstein_add_omega,
    epsilon_equal_speeds,
    epsilon_from_k,
    generating_angle,
    gyr_closed_form,
    gyr_definitional,
    gyr_matrix_form,
    gyration_angle,
    gyro_law_audit,
    half_angles_from_k,
    is_parallel,
    mcfarlane_one_plus_cos,
    omega_matrix,
    orientation_normal,
    precession_angles,
    rotation_angle_about_axis,
    rotation_from_axis_angle,
    tan_half_squared,
    velocity_parameter,
)
from tests.strategies import ball_vectors

COS_EPS = 40.0 / 41.0
SIN_EPS = -9.0 / 41.0


class TestGyrationPaths:
    """Test the three ways of computing gyr[u,v]."""

    def test_orthogonal_pair_matrix(self, u_x, v_y):
        """Test the xy block of gyr[u,v] for orthogonal 0.6 velocities."""
        m = gyr_closed_form(u_x, v_y).matrix
        expected = np.array([[COS_EPS, -SIN_EPS, 0.0], [SIN_EPS, COS_EPS, 0.0], [0.0, 0.0, 1.0]])
        assert np.allclose(m, expected, atol=1e-12)

    def test_turns_v_plus_u_into_u_plus_v(self, u_x, v_y):
        """Test gyr[u,v](v ⊕ u) = u ⊕ v."""
        image = gyr_closed_form(u_x, v_y).apply(einstein_add(v_y, u_x))
        assert np.allclose(image.array, [0.6, 0.48, 0.0], atol=1e-12)

    def test_inverse_is_reversed_gyration(self, u_x, v_y):
        """Test gyr[v,u] = gyr[u,v]^T."""
        forward = gyr_closed_form(u_x, v_y)
        assert forward.inverse().distance(gyr_closed_form(v_y, u_x)) <= 1e-12

    def test_parallel_is_identity(self):
        """Test that parallel and zero inputs give the identity."""
        u = BallVec(0.3, 0.0, 0.0)
        assert gyr_closed_form(u, BallVec(-0.7, 0.0, 0.0)).distance(Rotation3.identity()) == 0.0
        assert gyr_matrix_form(u, BallVec.zero()).distance(Rotation3.identity()) == 0.0
        assert is_parallel(u, BallVec(0.5, 0.0, 0.0))

    def test_parallel_check_for_tiny_velocities(self):
        """Test that orthogonal tiny velocities are not reported as parallel."""
        assert not is_parallel(BallVec(1e-200, 0.0, 0.0), BallVec(0.0, 1e-200, 0.0))
        assert is_parallel(BallVec(1e-200, 0.0, 0.0), BallVec(-3e-200, 0.0, 0.0))
        tiny_x, tiny_y = BallVec(1e-200, 0.0, 0.0), BallVec(0.0, 1e-200, 0.0)
        assert generating_angle(tiny_x, tiny_y) == pytest.approx(math.pi / 2)
        assert np.allclose(orientation_normal(tiny_x, tiny_y), [0.0, 0.0, 1.0])

    def test_definitional_matches_closed_form(self, generic_triple):
        """Test ⊖(u⊕v) ⊕ (u⊕(v⊕w)) against the closed-form matrix."""
        u, v, w = generic_triple
        oracle = gyr_definitional(u, v, w)
        assert np.allclose(oracle.array, gyr_closed_form(u, v).apply(w).array, atol=1e-12)

    def test_matrix_form_matches_closed_form(self, generic_triple):
        """Test I + alpha Omega + beta Omega^2 against the closed form."""
        u, v, _ = generic_triple
        assert gyr_matrix_form(u, v).distance(gyr_closed_form(u, v)) <= 1e-12

    def test_alpha_beta_orthogonal_pair(self, u_x, v_y):
        """Test alpha |u||v| sin(theta) reproduces sin(epsilon)."""
        alpha, beta = alpha_beta(u_x, v_y)
        assert alpha < 0.0 < beta
        assert alpha * 0.36 == pytest.approx(SIN_EPS, abs=1e-14)
        assert alpha_beta_residual(u_x, v_y) <= 1e-14

    def test_rotation_invariants(self, generic_triple):
        """Test orthogonality, unit determinant and the trace identity."""
        u, v, _ = generic_triple
        rotation = gyr_closed_form(u, v)
        assert rotation.orthogonality_residual() <= 1e-12
        assert rotation.determinant_residual() <= 1e-12
        assert rotation.trace_identity_residual() <= 1e-12

    def test_omega_matrix(self, generic_triple):
        """Test Omega x = (a x b) x x and the cube relation."""
        u, v, w = generic_triple
        om = omega_matrix(u, v)
        expected = np.cross(np.cross(u.array, v.array), w.array)
        assert np.allclose(om.apply(w), expected, atol=1e-15)
        assert om.cube_residual() <= 1e-14

    def test_addition_through_omega(self, generic_triple):
        """Test Einstein addition written with Omega."""
        u, v, _ = generic_triple
        assert np.allclose(einstein_add_omega(u, v).array, einstein_add(u, v).array, atol=1e-14)

    @settings(max_examples=50)
    @given(ball_vectors(), ball_vectors(), ball_vectors())
    def test_gyrocommutative_and_associative(self, u, v, w):
        """Test the gyrocommutative and left gyroassociative laws."""
        rotation = gyr_closed_form(u, v)
        lhs = einstein_add(u, einstein_add(v, w)).array
        rhs = einstein_add(einstein_add(u, v), rotation.apply(w)).array
        assert np.allclose(lhs, rhs, atol=1e-9)
        assert np.allclose(
            einstein_add(u, v).array, rotation.apply(einstein_add(v, u)).array, atol=1e-9
        )

    @settings(max_examples=50)
    @given(ball_vectors(), ball_vectors())
    def test_loop_properties(self, u, v):
        """Test gyr[u⊕v, v] = gyr[u,v] = gyr[u, v⊕u]."""
        rotation = gyr_closed_form(u, v)
        assert gyr_closed_form(einstein_add(u, v), v).distance(rotation) <= 1e-9
        assert gyr_closed_form(u, einstein_add(v, u)).distance(rotation) <= 1e-9


class TestAxisAngle:
    """Test axis-angle construction and measurement."""

    def test_identity_has_zero_angle(self):
        """Test that the identity measures as 0 about any axis."""
        assert rotation_angle_about_axis(Rotation3.identity(), [0.0, 0.0, 1.0]) == 0.0

    @pytest.mark.parametrize("angle", [math.pi / 3, -1.0, 2.5])
    def test_round_trip_about_z(self, angle):
        """Test that the measured angle equals the construction angle."""
        rotation = rotation_from_axis_angle([0.0, 0.0, 1.0], angle)
        assert rotation_angle_about_axis(rotation, [0.0, 0.0, 1.0]) == pytest.approx(angle, abs=1e-14)

    def test_tilted_axis(self):
        """Test a rotation about a non-coordinate axis."""
        axis = [1.0, 2.0, -2.0]
        rotation = rotation_from_axis_angle(axis, 0.7)
        assert rotation_angle_about_axis(rotation, axis) == pytest.approx(0.7, abs=1e-13)

    def test_axis_not_fixed(self):
        """Test that measuring about a moving axis raises AxisNotFixed."""
        rotation = rotation_from_axis_angle([0.0, 0.0, 1.0], math.pi / 3)
        with pytest.raises(AxisNotFixed):
            rotation_angle_about_axis(rotation, [1.0, 0.0, 0.0])

    def test_zero_axis(self):
        """Test that a zero axis is rejected."""
        with pytest.raises(ZeroVector):
            rotation_from_axis_angle([0.0, 0.0, 0.0], 1.0)


class TestGeneratingAngle:
    """Test the signed generating angle and orientation."""

    def test_quarter_turns(self, u_x, v_y):
        """Test +pi/2 counterclockwise and -pi/2 clockwise."""
        assert generating_angle(u_x, v_y) == pytest.approx(math.pi / 2)
        assert generating_angle(v_y, u_x) == pytest.approx(-math.pi / 2)

    def test_reference_normal_flips_sign(self, u_x, v_y):
        """Test that viewing from -z flips the sign."""
        assert generating_angle(u_x, v_y, [0.0, 0.0, -1.0]) == pytest.approx(-math.pi / 2)

    def test_antiparallel(self, u_x):
        """Test that opposite directions give pi."""
        assert generating_angle(u_x, BallVec(-0.2, 0.0, 0.0)) == pytest.approx(math.pi)

    def test_zero_velocity(self, u_x):
        """Test that a zero velocity has no generating angle."""
        with pytest.raises(ZeroVector):
            generating_angle(u_x, BallVec.zero())

    def test_cos_theta_from_gammas(self, u_x, v_y, generic_triple):
        """Test that the gamma factors recover cos(theta)."""
        assert cos_theta_from_gammas(u_x, v_y) == pytest.approx(0.0, abs=1e-14)
        u, v, _ = generic_triple
        assert cos_theta_from_gammas(u, v) == pytest.approx(math.cos(generating_angle(u, v)), abs=1e-12)

    def test_orientation_normal(self, u_x, v_y):
        """Test the oriented rotation axis and its parallel failure."""
        assert np.allclose(orientation_normal(u_x, v_y), [0.0, 0.0, 1.0])
        assert np.allclose(orientation_normal(v_y, u_x), [0.0, 0.0, 1.0])
        with pytest.raises(ZeroVector):
            orientation_normal(u_x, BallVec(0.1, 0.0, 0.0))


class TestThomasAngle:
    """Test the Thomas angle formulas against each other."""

    def test_velocity_parameter_equal_speeds(self, u_x, v_y):
        """Test k = (gamma+1)/(gamma-1) = 9 at speed 0.6."""
        assert velocity_parameter(u_x, v_y) == pytest.approx(9.0, abs=1e-12)

    def test_epsilon_from_k(self):
        """Test the k-form at theta = pi/2 with k = 9."""
        cos_eps, sin_eps = epsilon_from_k(9.0, math.pi / 2)
        assert cos_eps == pytest.approx(COS_EPS, abs=1e-15)
        assert sin_eps == pytest.approx(SIN_EPS, abs=1e-15)

    def test_half_angles(self):
        """Test the half-angle pair squares back to epsilon."""
        cos_half, sin_half = half_angles_from_k(9.0, math.pi / 2)
        assert cos_half > 0.0 > sin_half
        assert cos_half ** 2 - sin_half ** 2 == pytest.approx(COS_EPS, abs=1e-15)
        assert 2.0 * sin_half * cos_half == pytest.approx(SIN_EPS, abs=1e-15)

    def test_theta_pi_is_trivial(self):
        """Test that sin(theta) = 0 gives epsilon = 0."""
        assert epsilon_from_k(1.5, math.pi) == (1.0, 0.0)
        assert epsilon_from_k(1.5, 0.0) == (1.0, 0.0)

    def test_k_near_one_approaches_half_turn(self):
        """Test that |epsilon| approaches pi as k -> 1 and theta -> pi."""
        cos_eps, sin_eps = epsilon_from_k(1.0001, math.pi - 0.01)
        eps = math.atan2(sin_eps, cos_eps)
        assert eps < 0.0
        assert 2.9 < abs(eps) < math.pi

    def test_equal_speed_formula(self):
        """Test the equal-gamma formula against the k-form."""
        cos_eps, sin_eps = epsilon_equal_speeds(1.25, math.pi / 2)
        assert cos_eps == pytest.approx(COS_EPS, abs=1e-15)
        assert sin_eps == pytest.approx(SIN_EPS, abs=1e-15)
        for theta in (0.3, 1.2, -2.0, 3.0):
            assert np.allclose(epsilon_equal_speeds(1.8, theta), epsilon_from_k(2.8 / 0.8, theta), atol=1e-14)

    def test_mcfarlane_and_tan_half(self, u_x, v_y):
        """Test 1 + cos(eps) and tan^2(eps/2) from the three gammas."""
        gu, gv, guv = gamma(u_x), gamma(v_y), gamma_identity(u_x, v_y)
        assert mcfarlane_one_plus_cos(gu, gv, guv) == pytest.approx(1.0 + COS_EPS, abs=1e-14)
        assert tan_half_squared(gu, gv, guv) == pytest.approx(1.0 / 81.0, abs=1e-14)

    def test_all_paths_agree(self, u_x, v_y):
        """Test gammas, composites and the matrix angle against k."""
        assert np.allclose(angle_from_gammas(u_x, v_y), (COS_EPS, SIN_EPS), atol=1e-14)
        assert np.allclose(angle_from_composites(u_x, v_y), (COS_EPS, SIN_EPS), atol=1e-14)
        assert gyration_angle(u_x, v_y) == pytest.approx(math.atan2(SIN_EPS, COS_EPS), abs=1e-12)

    def test_gyration_angle_reuses_rotation(self, generic_triple):
        """Test that a precomputed gyr[u,v] gives the same angle."""
        u, v, _ = generic_triple
        rotation = gyr_closed_form(u, v)
        assert gyration_angle(u, v, rotation=rotation) == gyration_angle(u, v)

    def test_precession_angles(self, u_x, v_y):
        """Test the combined record for the orthogonal pair."""
        angles = precession_angles(u_x, v_y)
        assert not angles.degenerate
        assert angles.theta == pytest.approx(math.pi / 2)
        assert angles.k == pytest.approx(9.0)
        assert angles.omega_theta == pytest.approx(0.36)
        assert angles.epsilon == pytest.approx(math.atan2(SIN_EPS, COS_EPS), abs=1e-14)

    def test_precession_angles_degenerate(self, u_x):
        """Test that antiparallel velocities are flagged degenerate."""
        angles = precession_angles(u_x, BallVec(-0.3, 0.0, 0.0))
        assert angles.degenerate
        assert angles.epsilon == 0.0

    @settings(max_examples=50)
    @given(ball_vectors(min_speed=0.05), ball_vectors(min_speed=0.05))
    def test_signs_are_opposite(self, u, v):
        """Test sin(eps) sin(theta) < 0 whenever the pair spans a plane."""
        angles = precession_angles(u, v)
        if angles.degenerate or abs(math.sin(angles.theta)) < 1e-6:
            return
        assert angles.sin_eps * math.sin(angles.theta) < 0.0
        assert abs(angles.epsilon) < math.pi


class TestLawAudit:
    """Test the gyrogroup law audit."""

    def test_record_nan_is_infinite(self):
        """Test that NaN residuals count as failures."""
        entry = LawResidual("x")
        entry.record(1e-13)
        entry.record(float("nan"))
        assert entry.samples == 2
        assert entry.max_residual == math.inf
        assert not entry.passed(1e-10)

    def test_zero_samples(self):
        """Test that an empty audit returns an empty report."""
        assert gyro_law_audit(0) == {}

    def test_small_audit_passes(self):
        """Test that every law holds on a small seeded sample."""
        report = gyro_law_audit(20, seed=3, max_speed=0.8)
        assert "sampling" not in report
        assert len(report) >= 30
        for law, entry in report.items():
            assert entry.samples == 20, law
            assert entry.passed(1e-9), f"{law}: {entry.max_residual}"

    def test_audit_is_deterministic(self):
        """Test that equal seeds give equal residuals."""
        first = {k: v.max_residual for k, v in gyro_law_audit(5, seed=11).items()}
        second = {k: v.max_residual for k, v in gyro_law_audit(5, seed=11).items()}
        assert first == second
