import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial.transform import Rotation

from hamilton import (
    E, I, J, K, AxisAngle, BadAxis, BadParameter, NotSmall, NotUnit, Quaternion, UnitQuaternion,
    Vector3, axis_angle_to_quat, compose, conjugate_action, infinitesimal_rotate, inverse,
    norm_sq, quat_mul, quat_to_axis_angle, rodrigues_rotate, rotation_matrix, slerp, so4_action,
    so4_matrix,
)
from hamilton.rotations import angle_between, canonical

from conftest import unit_axes, unit_quaternions, vectors
from oracles import expand_mul, rotate_by_matrix_power_series

R2 = math.sqrt(2) / 2
X, Y, Z = Vector3(1.0, 0.0, 0.0), Vector3(0.0, 1.0, 0.0), Vector3(0.0, 0.0, 1.0)
QUARTER_Z = UnitQuaternion(R2, 0, 0, R2)


def vclose(a, b, tol=1e-12):
    return (a - b).norm() <= tol * max(1.0, a.norm(), b.norm())


def test_unit_quaternion_validates_and_keeps_components():
    q = UnitQuaternion(R2, 0, 0, R2)
    assert (q.alpha, q.delta) == (R2, R2)
    with pytest.raises(NotUnit):
        UnitQuaternion(1, 1, 0, 0)


def test_axis_angle_validates_axis():
    with pytest.raises(BadAxis):
        AxisAngle(Vector3(1.0, 1.0, 0.0), 0.3)
    assert AxisAngle((0, 0, 1), 1.0).axis == Z


def test_conjugate_action_examples():
    assert conjugate_action(K, X) == Vector3(-1, 0, 0)
    assert conjugate_action(E, Vector3(1.5, -2, 3)) == Vector3(1.5, -2, 3)
    assert vclose(conjugate_action(QUARTER_Z, X), Y)
    # triple product by the basis-expansion oracle
    qv = expand_mul(tuple(QUARTER_Z), (0, 1, 0, 0))
    full = expand_mul(qv, tuple(inverse(QUARTER_Z)))
    assert abs(full[0]) < 1e-15 and vclose(Vector3(*full[1:]), Y)
    with pytest.raises(NotUnit):
        conjugate_action(Quaternion(2, 0, 0, 0), X)


@given(unit_quaternions(), vectors)
def test_conjugation_keeps_length_and_purity(q, v):
    full = quat_mul(quat_mul(q, v.to_quaternion()), inverse(q))
    assert abs(full.alpha) <= 1e-12 * max(1.0, v.norm())
    assert abs(full.vector.norm() - v.norm()) <= 1e-9 * max(1.0, v.norm())
    assert conjugate_action(q, v) == full.vector


def test_rotation_matrix_examples():
    assert np.array_equal(rotation_matrix(E), np.eye(3))
    assert np.array_equal(rotation_matrix(K), np.diag([-1.0, -1.0, 1.0]))


@given(unit_quaternions())
def test_rotation_matrix_matches_conjugation_on_basis(q):
    R = rotation_matrix(q)
    for col, e in enumerate((X, Y, Z)):
        assert np.allclose(R[:, col], tuple(conjugate_action(q, e)), atol=1e-12)


@given(unit_quaternions())
def test_rotation_matrix_is_proper_orthogonal(q):
    R = rotation_matrix(q)
    assert np.linalg.norm(R.T @ R - np.eye(3)) <= 1e-9
    assert abs(np.linalg.det(R) - 1) <= 1e-9


@given(unit_quaternions())
def test_double_cover(q):
    assert np.max(np.abs(rotation_matrix(q) - rotation_matrix(-q))) <= 1e-12


@given(unit_quaternions())
def test_rotation_matrix_agrees_with_scipy(q):
    # scipy stores (x, y, z, w)
    ref = Rotation.from_quat([q.beta, q.gamma, q.delta, q.alpha]).as_matrix()
    assert np.allclose(rotation_matrix(q), ref, atol=1e-12)


@given(unit_quaternions(), unit_quaternions())
def test_homomorphism(q1, q2):
    R12 = rotation_matrix(compose(q1, q2))
    assert np.linalg.norm(R12 - rotation_matrix(q1) @ rotation_matrix(q2)) <= 1e-9


def test_axis_angle_to_quat_examples():
    assert axis_angle_to_quat(AxisAngle(Vector3(0.6, 0.8, 0.0), 0.0)) == E
    assert axis_angle_to_quat(AxisAngle(Z, math.pi)).isclose(K, 1e-15)
    assert axis_angle_to_quat(AxisAngle(Z, math.pi / 2)).isclose(Quaternion(R2, 0, 0, R2), 1e-15)


def test_quat_to_axis_angle_examples():
    assert quat_to_axis_angle(E) == AxisAngle(X, 0.0)
    assert quat_to_axis_angle(K) == AxisAngle(Z, math.pi)
    assert quat_to_axis_angle(-K) == AxisAngle(Z, math.pi)
    aa = quat_to_axis_angle(-E)
    assert aa.angle == 0.0 and aa.axis == X


def test_canonical_tie_break():
    assert canonical(Quaternion(0, 0, -1, 0)) == Quaternion(0, 0, 1, 0)
    assert canonical(Quaternion(0, 0.6, -0.8, 0)) == Quaternion(0, 0.6, -0.8, 0)
    assert canonical(Quaternion(-0.5, 0.5, 0.5, 0.5)) == Quaternion(0.5, -0.5, -0.5, -0.5)


@given(unit_quaternions())
def test_axis_angle_round_trip(q):
    aa = quat_to_axis_angle(q)
    assert 0 <= aa.angle <= math.pi
    back = axis_angle_to_quat(aa)
    assert min(abs(back - q), abs(back + q)) <= 1e-9
    assert back.alpha >= -1e-15


def test_rodrigues_examples():
    assert vclose(rodrigues_rotate(AxisAngle(Z, math.pi / 2), X), Y)
    n = Vector3(2 / 3, -1 / 3, 2 / 3)
    assert vclose(rodrigues_rotate(AxisAngle(n, 1.234), n), n)
    theta = 1e-4
    v = Vector3(0.3, -1.2, 0.5)
    first_order = v + Z.cross(v) * theta
    assert (rodrigues_rotate(AxisAngle(Z, theta), v) - first_order).norm() <= theta ** 2 * v.norm()


@given(unit_axes(), st.floats(-2 * math.pi, 2 * math.pi), vectors)
def test_rodrigues_equals_conjugation(axis, angle, v):
    aa = AxisAngle(axis, angle)
    a = rodrigues_rotate(aa, v)
    b = conjugate_action(axis_angle_to_quat(aa), v)
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-9


@settings(max_examples=50)
@given(unit_axes(), st.floats(-math.pi, math.pi), vectors)
def test_rodrigues_matches_exponential_series(axis, angle, v):
    ref = rotate_by_matrix_power_series(tuple(axis), angle, tuple(v))
    assert np.allclose(tuple(rodrigues_rotate(AxisAngle(axis, angle), v)), ref, atol=1e-9)


def test_infinitesimal_examples(rng):
    v = Vector3(0.3, -1.2, 0.5)
    assert infinitesimal_rotate(E, v) == v
    eps = 1e-3
    q = UnitQuaternion(math.sqrt(1 - eps * eps), 0, 0, eps)
    approx = infinitesimal_rotate(q, v)
    assert vclose(approx, v + Z.cross(v) * (2 * eps * q.alpha))
    with pytest.raises(NotSmall):
        infinitesimal_rotate(axis_angle_to_quat(AxisAngle(Z, 1.0)), v)


def test_infinitesimal_error_is_quadratic(rng):
    # |error| <= C eps^2 |v| with C <= 4 at every eps
    for eps in (1e-2, 1e-3, 1e-4):
        worst = 0.0
        for _ in range(500):
            n = rng.standard_normal(3)
            n /= np.linalg.norm(n)
            q = UnitQuaternion(math.sqrt(1 - eps * eps), *(eps * n))
            v = Vector3(*rng.uniform(-1, 1, 3))
            err = (infinitesimal_rotate(q, v) - conjugate_action(q, v)).norm()
            worst = max(worst, err / (eps * eps * v.norm()))
        assert worst <= 4.0


def test_so4_examples():
    v = Quaternion(0.1, -0.2, 0.3, 0.9)
    assert so4_action(E, E, v) == v
    assert so4_action(I, -I, J) == -J
    assert so4_action(I, -I, E) == E
    q = axis_angle_to_quat(AxisAngle(Vector3(0.0, 0.6, 0.8), 0.9))
    w = Vector3(1.0, 2.0, -0.5)
    got = so4_action(q, inverse(q), w.to_quaternion())
    assert abs(got.alpha) < 1e-15
    assert vclose(got.vector, conjugate_action(q, w))


def test_so4_matrix_examples():
    assert np.array_equal(so4_matrix(E, E), np.eye(4))
    ql = axis_angle_to_quat(AxisAngle(X, 0.4))
    qr = axis_angle_to_quat(AxisAngle(Vector3(0.0, 0.6, 0.8), -1.3))
    M = so4_matrix(ql, qr)
    for n, b in enumerate((E, I, J, K)):
        assert np.array_equal(M[:, n], tuple(so4_action(ql, qr, b)))


@given(unit_quaternions(), unit_quaternions())
def test_so4_matrix_properties(ql, qr):
    M = so4_matrix(ql, qr)
    assert np.linalg.norm(M.T @ M - np.eye(4)) <= 1e-9
    assert abs(np.linalg.det(M) - 1) <= 1e-9
    assert np.max(np.abs(M - so4_matrix(-ql, -qr))) <= 1e-12


@given(unit_quaternions(), unit_quaternions(), vectors)
def test_so4_preserves_norm(ql, qr, v):
    w = Quaternion(0.7, *v)
    assert abs(norm_sq(so4_action(ql, qr, w)) - norm_sq(w)) <= 1e-9 * max(1.0, norm_sq(w))


def test_compose_examples():
    q = axis_angle_to_quat(AxisAngle(Vector3(0.0, 0.6, 0.8), 0.9))
    assert compose(q, E) == q
    assert compose(QUARTER_Z, QUARTER_Z).isclose(K, 1e-15)
    assert expand_mul(tuple(QUARTER_Z), tuple(QUARTER_Z))[3] == pytest.approx(1.0, abs=1e-15)


def test_compose_renormalises_only_past_drift():
    drifted = Quaternion(1 + 4e-10, 0, 0, 0)
    assert abs(norm_sq(compose(drifted, E)) - 1) <= 1e-12
    exact = compose(QUARTER_Z, QUARTER_Z)
    assert exact == UnitQuaternion(*quat_mul(QUARTER_Z, QUARTER_Z))


def test_slerp_examples():
    q = axis_angle_to_quat(AxisAngle(Vector3(0.0, 0.6, 0.8), 0.9))
    for t in (0.0, 0.3, 1.0):
        assert slerp(q, q, t).isclose(q, 1e-12)
    assert slerp(E, K, 0.5).isclose(Quaternion(R2, 0, 0, R2), 1e-15)
    with pytest.raises(BadParameter):
        slerp(E, K, 1.5)


def test_slerp_takes_short_path():
    q0 = axis_angle_to_quat(AxisAngle(Vector3(0.0, 0.6, 0.8), 0.9))
    bump = axis_angle_to_quat(AxisAngle(X, 0.2))
    q1 = -UnitQuaternion(*quat_mul(q0, bump))
    for t in np.linspace(0, 1, 21):
        assert angle_between(slerp(q0, q1, t), q0) <= math.pi / 2
        assert angle_between(slerp(q0, q1, t), q0) <= 0.1 + 1e-12
    end = slerp(q0, q1, 1.0)
    assert end.isclose(-q1, 1e-12)


@given(unit_quaternions(), unit_quaternions(), st.floats(0, 1))
def test_slerp_constant_speed(q0, q1, t):
    total = angle_between(q0, q1)
    q = slerp(q0, q1, t)
    assert abs(norm_sq(q) - 1) <= 1e-12
    assert abs(angle_between(q, q0) - t * total) <= 1e-9


def test_slerp_near_parallel_fallback():
    q0 = E
    q1 = UnitQuaternion(*Quaternion(1, 1e-9, 0, 0).normalized())
    mid = slerp(q0, q1, 0.5)
    assert abs(mid.beta - 0.5e-9) <= 1e-15
