"""Hopf maps S^1 -> S^1, S^3 -> S^2 and S^7 -> S^4.

Sphere points are plain real arrays. A point of S^3 is read as a complex
pair ``(z1, z2) = (x1 + i x2, x3 + i x4)`` and a point of S^7 as a quaternion
pair ``(q1, q2)`` whose components are the first and last four coordinates.
All maps broadcast over leading axes.

Quaternion scalars act on the right: ``(q1, q2) ~ (q1 w, q2 w)``. This is the
side that leaves ``q1 * conj(q2)`` unchanged, which is what the quaternionic
map is built from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Complex, Real
from typing import Literal

import numpy as np

from . import arrays
from .core import Quaternion, inverse, quat_mul
from .errors import AtPole, BadCount, BadParameter, NotOnSphere, ZeroPair

Which = Literal["real", "complex", "quaternionic"]

INPUT_TOL = 1e-6
OUTPUT_TOL = 1e-9

BASE_DIM = {"real": 2, "complex": 3, "quaternionic": 5}


def on_sphere(p, tol: float = INPUT_TOL):
    p = np.asarray(p, dtype=float)
    return np.abs(np.sum(p * p, axis=-1) - 1.0) <= tol


def _require_sphere(p, dim: int, tol: float = INPUT_TOL) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape[-1:] != (dim,):
        raise NotOnSphere(f"expected {dim} coordinates, got shape {p.shape}")
    if not np.all(on_sphere(p, tol)):
        raise NotOnSphere(f"point(s) not on S^{dim - 1} within {tol}")
    return p


def complex_pair(z1: complex, z2: complex) -> np.ndarray:
    return np.array([z1.real, z1.imag, z2.real, z2.imag], dtype=float)


def quaternion_pair(q1: Quaternion, q2: Quaternion) -> np.ndarray:
    return np.array([*q1, *q2], dtype=float)


def hopf_real(p) -> np.ndarray:
    """``(cos t, sin t) -> (cos 2t, sin 2t)``; antipodes share an image."""
    p = _require_sphere(p, 2)
    x1, x2 = p[..., 0], p[..., 1]
    return np.stack([x1 * x1 - x2 * x2, 2 * x1 * x2], axis=-1)


def hopf_complex(p) -> np.ndarray:
    """``(z1, z2) -> (2 Re(z1 conj z2), 2 Im(z1 conj z2), |z1|^2 - |z2|^2)``."""
    p = _require_sphere(p, 4)
    a, b, c, d = np.moveaxis(p, -1, 0)
    # z1 conj(z2) = (a + ib)(c - id)
    re = a * c + b * d
    im = b * c - a * d
    return np.stack([2 * re, 2 * im, a * a + b * b - c * c - d * d], axis=-1)


def hopf_quaternionic(p) -> np.ndarray:
    """``(q1, q2) -> (2 q1 conj(q2), |q1|^2 - |q2|^2)`` in R^5."""
    p = _require_sphere(p, 8)
    q1, q2 = p[..., :4], p[..., 4:]
    prod = arrays.qmul(q1, arrays.qconj(q2))
    h = arrays.qnorm_sq(q1) - arrays.qnorm_sq(q2)
    return np.concatenate([2 * prod, h[..., None]], axis=-1)


HOPF_MAPS = {"real": hopf_real, "complex": hopf_complex, "quaternionic": hopf_quaternionic}


def hopf(p, which: Which) -> np.ndarray:
    try:
        return HOPF_MAPS[which](p)
    except KeyError:
        raise BadParameter(f"unknown Hopf map {which!r}") from None


def fiber_contains(total, base, which: Which, tol: float = OUTPUT_TOL):
    """Whether ``total`` lies in the fibre over ``base``."""
    base = _require_sphere(base, BASE_DIM[which])
    image = hopf(total, which)
    return np.linalg.norm(image - base, axis=-1) <= tol


def section(base, which: Which) -> np.ndarray:
    """One preimage of ``base``, chosen by a two-chart rule.

    Near the north pole (last base coordinate >= 0) the first slot is taken
    real and positive, otherwise the second. No single continuous choice
    works on the whole base.
    """
    base = _require_sphere(base, BASE_DIM[which])
    h = base[-1]
    if which == "real":
        c, s = base
        if c >= 0:
            x1 = math.sqrt((1 + c) / 2)
            return np.array([x1, s / (2 * x1)])
        x2 = math.sqrt((1 - c) / 2)
        return np.array([s / (2 * x2), x2])
    # base = (2 z1 conj(z2), |z1|^2 - |z2|^2) with |z1|^2 + |z2|^2 = 1
    p = base[:-1] / 2
    if which == "complex":
        m = complex(p[0], p[1])
        if h >= 0:
            r = math.sqrt((1 + h) / 2)
            return complex_pair(complex(r), (m / r).conjugate())
        r = math.sqrt((1 - h) / 2)
        return complex_pair(m / r, complex(r))
    if which == "quaternionic":
        m = Quaternion(*p)
        if h >= 0:
            r = math.sqrt((1 + h) / 2)
            return quaternion_pair(Quaternion(r), (m / r).conjugate())
        r = math.sqrt((1 - h) / 2)
        return quaternion_pair(m / r, Quaternion(r))
    raise BadParameter(f"unknown Hopf map {which!r}")


def fiber_sample(base, n: int, which: Which, rng: np.random.Generator | None = None) -> np.ndarray:
    """``n`` points of the fibre over ``base`` (rows of the returned array).

    real: the two antipodal preimages, whatever ``n`` is (n >= 1).
    complex: the section times ``exp(2 pi i k / n)`` for ``k = 0..n-1``.
    quaternionic: the section times ``n`` unit quaternions drawn uniformly
    from S^3 with ``rng``, acting on the right. ``rng`` defaults to
    ``np.random.default_rng(0)``.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise BadCount(f"n must be a positive integer, got {n!r}")
    s = section(base, which)
    if which == "real":
        pts = np.stack([s, -s])
    elif which == "complex":
        z1, z2 = complex(s[0], s[1]), complex(s[2], s[3])
        lam = np.exp(2j * np.pi * np.arange(n) / n)
        w1, w2 = lam * z1, lam * z2
        pts = np.stack([w1.real, w1.imag, w2.real, w2.imag], axis=-1)
    else:
        if rng is None:
            rng = np.random.default_rng(0)
        w = arrays.random_unit(rng, n)
        pts = np.concatenate([arrays.qmul(s[:4], w), arrays.qmul(s[4:], w)], axis=-1)
    ok = fiber_contains(pts, base, which)
    if not np.all(ok):
        raise AssertionError("sampled point left its fibre")
    return pts


def stereographic_project(p, tol: float = OUTPUT_TOL) -> np.ndarray:
    """S^3 minus (0, 0, 0, 1) to R^3: ``(x1, x2, x3) / (1 - x4)``."""
    p = _require_sphere(p, 4)
    denom = 1.0 - p[..., 3]
    if np.any(denom <= tol):
        raise AtPole("cannot project the pole (0, 0, 0, 1)")
    return p[..., :3] / denom[..., None]


# -- projective lines ---------------------------------------------------------

Field = Literal["real", "complex", "quaternion"]


def _field_of(a, b) -> Field:
    if isinstance(a, Quaternion) or isinstance(b, Quaternion):
        return "quaternion"
    if isinstance(a, Real) and isinstance(b, Real):
        return "real"
    if isinstance(a, Complex) and isinstance(b, Complex):
        return "complex"
    raise TypeError(f"unsupported scalar types {type(a).__name__}, {type(b).__name__}")


def _to_quaternion(x) -> Quaternion:
    if isinstance(x, Quaternion):
        return x
    x = complex(x)
    return Quaternion(x.real, x.imag)


@dataclass(frozen=True)
class ProjectiveLinePoint:
    """A class ``[(a, b)]`` in chart form: ``(1, b a^-1)``, or ``(0, 1)`` at infinity."""

    field: Field
    first: object
    second: object

    @property
    def at_infinity(self) -> bool:
        return abs(self.first) == 0

    def isclose(self, other: ProjectiveLinePoint, tol: float = OUTPUT_TOL) -> bool:
        if self.at_infinity or other.at_infinity:
            return self.at_infinity == other.at_infinity
        return abs(self.second - other.second) <= tol * max(1.0, abs(self.second))


def projectivize(a, b, tol: float = OUTPUT_TOL) -> ProjectiveLinePoint:
    """Chart representative of the class of ``(a, b)`` under ``(a, b) ~ (a l, b l)``.

    ``a`` counts as zero when ``|a| <= tol * |b|``; such pairs map to the point
    at infinity ``(0, 1)``.
    """
    field = _field_of(a, b)
    if field == "quaternion":
        a, b = _to_quaternion(a), _to_quaternion(b)
    if abs(a) == 0 and abs(b) == 0:
        raise ZeroPair("(0, 0) does not define a point of the projective line")
    zero = Quaternion(0) if field == "quaternion" else 0
    one = Quaternion(1) if field == "quaternion" else 1
    if abs(a) <= tol * abs(b):
        return ProjectiveLinePoint(field, zero, one)
    if a == one:
        return ProjectiveLinePoint(field, one, b)
    if field == "quaternion":
        return ProjectiveLinePoint(field, one, quat_mul(b, inverse(a)))
    return ProjectiveLinePoint(field, one, b / a)
