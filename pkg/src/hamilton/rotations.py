"""Unit quaternions acting as rotations of R^3 and R^4."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    E,
    I,
    J,
    K,
    Quaternion,
    Vector3,
    inner_product,
    inverse,
    norm_sq,
    quat_mul,
    require_unit,
)
from .errors import BadAxis, BadParameter, NotSmall

# renormalise composed rotations only past this drift in |q|^2
RENORMALIZE_DRIFT = 1e-12
# vector-part norm above which the first-order rotation formula is refused
SMALL_ROTATION_LIMIT = 0.1
# below this total angle slerp falls back to normalised lerp
SLERP_LINEAR_THRESHOLD = 1e-6

LEVI_CIVITA = np.zeros((3, 3, 3))
for _a, _b, _c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_a, _b, _c] = 1.0
    LEVI_CIVITA[_a, _c, _b] = -1.0

X_AXIS = Vector3(1.0, 0.0, 0.0)


class UnitQuaternion(Quaternion):
    """A quaternion validated to have unit norm. Components are kept as given."""

    __slots__ = ()

    def __post_init__(self):
        Quaternion.__post_init__(self)
        require_unit(self)

    @classmethod
    def from_quaternion(cls, q: Quaternion, tol: float = DEFAULT_TOL) -> UnitQuaternion:
        require_unit(q, tol)
        return cls(q.alpha, q.beta, q.gamma, q.delta)

    @classmethod
    def normalize(cls, q: Quaternion) -> UnitQuaternion:
        return cls.from_quaternion(q.normalized())


@dataclass(frozen=True)
class AxisAngle:
    axis: Vector3
    angle: float

    def __post_init__(self):
        if not isinstance(self.axis, Vector3):
            object.__setattr__(self, "axis", Vector3(*self.axis))
        _require_axis(self.axis)

    def to_dict(self) -> dict:
        return {"axis": list(self.axis), "angle_rad": self.angle}

    @classmethod
    def from_dict(cls, d: dict) -> AxisAngle:
        return cls(Vector3(*d["axis"]), float(d["angle_rad"]))


def _require_axis(axis: Vector3, tol: float = DEFAULT_TOL) -> None:
    if abs(axis.dot(axis) - 1.0) > tol:
        raise BadAxis(f"axis {tuple(axis)} is not a unit vector")


def canonical(q: Quaternion) -> Quaternion:
    """Representative of ``{q, -q}`` with ``alpha >= 0``.

    When ``alpha == 0`` the first nonzero of ``(beta, gamma, delta)`` is made positive.
    """
    if q.alpha > 0:
        return q
    if q.alpha < 0:
        return -q
    for c in (q.beta, q.gamma, q.delta):
        if c != 0:
            return q if c > 0 else -q
    return q


def conjugate_action(q: Quaternion, v: Vector3, tol: float = DEFAULT_TOL) -> Vector3:
    require_unit(q, tol)
    return quat_mul(quat_mul(q, v.to_quaternion()), inverse(q)).vector


def rotation_matrix(q: Quaternion, tol: float = DEFAULT_TOL) -> np.ndarray:
    """3x3 matrix ``R`` with ``R v == vector part of q v q^-1``."""
    require_unit(q, tol)
    a = q.alpha
    u = np.array([q.beta, q.gamma, q.delta], dtype=float)
    u_tilde = np.einsum("abc,c->ab", LEVI_CIVITA, u)
    return (a * a - u @ u) * np.eye(3) - 2 * a * u_tilde + 2 * np.outer(u, u)


def axis_angle_to_quat(aa: AxisAngle) -> UnitQuaternion:
    _require_axis(aa.axis)
    h = 0.5 * aa.angle
    s = math.sin(h)
    return UnitQuaternion(math.cos(h), s * aa.axis.x, s * aa.axis.y, s * aa.axis.z)


def quat_to_axis_angle(q: Quaternion, tol: float = DEFAULT_TOL) -> AxisAngle:
    """Axis and angle in ``[0, pi]`` of the canonical representative of ``q``.

    A zero rotation reports the x axis.
    """
    require_unit(q, tol)
    q = canonical(q)
    v = q.vector
    s = v.norm()
    if s == 0:
        return AxisAngle(X_AXIS, 0.0)
    angle = 2.0 * math.atan2(s, q.alpha)
    return AxisAngle(v * (1.0 / s), angle)


def rodrigues_rotate(aa: AxisAngle, v: Vector3) -> Vector3:
    """``cos t v + sin t n x v + (1 - cos t)(n . v) n``, no quaternion products."""
    n = aa.axis
    _require_axis(n)
    c, s = math.cos(aa.angle), math.sin(aa.angle)
    return v * c + n.cross(v) * s + n * ((1.0 - c) * n.dot(v))


def infinitesimal_rotate(q: Quaternion, v: Vector3, tol: float = DEFAULT_TOL) -> Vector3:
    """First-order rotation ``v + 2 alpha u x v`` for ``q`` close to ``e``."""
    require_unit(q, tol)
    u = q.vector
    if u.norm() > SMALL_ROTATION_LIMIT:
        raise NotSmall(f"|u| = {u.norm():.3g} exceeds {SMALL_ROTATION_LIMIT}")
    return v + u.cross(v) * (2.0 * q.alpha)


def so4_action(ql: Quaternion, qr: Quaternion, v: Quaternion, tol: float = DEFAULT_TOL) -> Quaternion:
    require_unit(ql, tol)
    require_unit(qr, tol)
    return quat_mul(quat_mul(ql, v), qr)


def so4_matrix(ql: Quaternion, qr: Quaternion, tol: float = DEFAULT_TOL) -> np.ndarray:
    cols = [so4_action(ql, qr, b, tol) for b in (E, I, J, K)]
    return np.array([list(c) for c in cols], dtype=float).T


def compose(q1: Quaternion, q2: Quaternion, tol: float = DEFAULT_TOL) -> UnitQuaternion:
    """Rotation ``q1`` applied after ``q2``: ``R(q1 q2) = R(q1) R(q2)``."""
    require_unit(q1, tol)
    require_unit(q2, tol)
    q = quat_mul(q1, q2)
    if abs(norm_sq(q) - 1.0) > RENORMALIZE_DRIFT:
        q = q.normalized()
    return UnitQuaternion(*q)


def slerp(q0: Quaternion, q1: Quaternion, t: float, tol: float = DEFAULT_TOL) -> UnitQuaternion:
    """Constant-speed interpolation along the shorter great arc of S^3."""
    require_unit(q0, tol)
    require_unit(q1, tol)
    if not 0.0 <= t <= 1.0:
        raise BadParameter(f"t must lie in [0, 1], got {t!r}")
    if inner_product(q0, q1) < 0:
        q1 = -q1
    total = _arc(q0, q1)
    if total < SLERP_LINEAR_THRESHOLD:
        q = q0 * (1.0 - t) + q1 * t
        return UnitQuaternion(*q.normalized())
    s = math.sin(total)
    w0 = math.sin((1.0 - t) * total) / s
    w1 = math.sin(t * total) / s
    q = q0 * w0 + q1 * w1
    # remove rounding drift only; the weights already give unit norm
    if abs(norm_sq(q) - 1.0) > RENORMALIZE_DRIFT:
        q = q.normalized()
    return UnitQuaternion(*q)


def _arc(a: Quaternion, b: Quaternion) -> float:
    # 2 atan2(|a - b|, |a + b|) stays accurate for nearly equal unit quaternions
    return 2.0 * math.atan2(abs(a - b), abs(a + b))


def angle_between(q0: Quaternion, q1: Quaternion) -> float:
    """Great-circle distance on S^3 between unit ``q0`` and ``q1``, ignoring sign."""
    if inner_product(q0, q1) < 0:
        q1 = -q1
    return _arc(q0, q1)


__all__ = [
    "AxisAngle",
    "UnitQuaternion",
    "angle_between",
    "axis_angle_to_quat",
    "canonical",
    "compose",
    "conjugate_action",
    "infinitesimal_rotate",
    "quat_to_axis_angle",
    "rodrigues_rotate",
    "rotation_matrix",
    "slerp",
    "so4_action",
    "so4_matrix",
]
