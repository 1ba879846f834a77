"""Quaternion arithmetic.

Components are stored in the order (alpha, beta, gamma, delta), i.e. the
coefficients of the basis ``e, i, j, k``. Integer components are kept as
Python ints so that products and the square identities stay exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real

from .errors import NotImaginary, NotUnit, ZeroQuaternion

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Vector3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise ValueError(f"non-finite component in {self!r}")

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, other: Vector3) -> Vector3:
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vector3) -> Vector3:
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vector3:
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> Vector3:
        return Vector3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def dot(self, other: Vector3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: Vector3) -> Vector3:
        return Vector3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def to_quaternion(self) -> Quaternion:
        return Quaternion(0, self.x, self.y, self.z)


@dataclass(frozen=True, slots=True)
class Quaternion:
    """``alpha*e + beta*i + gamma*j + delta*k``."""

    alpha: float
    beta: float = 0
    gamma: float = 0
    delta: float = 0

    def __post_init__(self):
        for c in (self.alpha, self.beta, self.gamma, self.delta):
            if not isinstance(c, Real) or not math.isfinite(c):
                raise ValueError(f"components must be finite reals, got {c!r}")

    @classmethod
    def from_vector(cls, v: Vector3) -> Quaternion:
        return cls(0, v.x, v.y, v.z)

    @classmethod
    def from_scalar_vector(cls, s: float, v: Vector3) -> Quaternion:
        return cls(s, v.x, v.y, v.z)

    def __iter__(self):
        yield self.alpha
        yield self.beta
        yield self.gamma
        yield self.delta

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    # componentwise, so that subclasses such as UnitQuaternion compare equal
    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.as_tuple() == other.as_tuple()
        return NotImplemented

    def __hash__(self):
        return hash(self.as_tuple())

    @property
    def scalar(self) -> float:
        return self.alpha

    @property
    def vector(self) -> Vector3:
        return Vector3(self.beta, self.gamma, self.delta)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return quat_add(self, other)
        if isinstance(other, Real):
            return Quaternion(self.alpha + other, self.beta, self.gamma, self.delta)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return quat_add(self, -other)
        if isinstance(other, Real):
            return Quaternion(self.alpha - other, self.beta, self.gamma, self.delta)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Real):
            return Quaternion(other - self.alpha, -self.beta, -self.gamma, -self.delta)
        return NotImplemented

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.alpha, -self.beta, -self.gamma, -self.delta)

    def __pos__(self) -> Quaternion:
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, Real):
            return Quaternion(self.alpha * other, self.beta * other,
                              self.gamma * other, self.delta * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Quaternion(self.alpha / other, self.beta / other,
                              self.gamma / other, self.delta / other)
        if isinstance(other, Quaternion):
            # right division: a / b = a * b^-1
            return quat_mul(self, inverse(other))
        return NotImplemented

    def __abs__(self) -> float:
        return math.sqrt(norm_sq(self))

    def conjugate(self) -> Quaternion:
        return conjugate(self)

    def norm_sq(self) -> float:
        return norm_sq(self)

    def norm(self) -> float:
        return abs(self)

    def inverse(self) -> Quaternion:
        return inverse(self)

    def normalized(self) -> Quaternion:
        n = abs(self)
        if n == 0:
            raise ZeroQuaternion("cannot normalize the zero quaternion")
        return self / n

    def isclose(self, other: Quaternion, tol: float = DEFAULT_TOL) -> bool:
        scale = max(1.0, abs(self), abs(other))
        return abs(self - other) <= tol * scale


E = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
ZERO = Quaternion(0, 0, 0, 0)


def scalar_part(q: Quaternion) -> Quaternion:
    return Quaternion(q.alpha, 0, 0, 0)


def vector_part(q: Quaternion) -> Quaternion:
    return Quaternion(0, q.beta, q.gamma, q.delta)


def quat_add(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(a.alpha + b.alpha, a.beta + b.beta,
                      a.gamma + b.gamma, a.delta + b.delta)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product via ``(aa' - u.u', a u' + a' u + u x u')``."""
    a0, a1, a2, a3 = a.alpha, a.beta, a.gamma, a.delta
    b0, b1, b2, b3 = b.alpha, b.beta, b.gamma, b.delta
    return Quaternion(
        a0 * b0 - (a1 * b1 + a2 * b2 + a3 * b3),
        a0 * b1 + b0 * a1 + (a2 * b3 - a3 * b2),
        a0 * b2 + b0 * a2 + (a3 * b1 - a1 * b3),
        a0 * b3 + b0 * a3 + (a1 * b2 - a2 * b1),
    )


def conjugate(q: Quaternion) -> Quaternion:
    return Quaternion(q.alpha, -q.beta, -q.gamma, -q.delta)


def norm_sq(q: Quaternion) -> float:
    return q.alpha * q.alpha + q.beta * q.beta + q.gamma * q.gamma + q.delta * q.delta


def inner_product(a: Quaternion, b: Quaternion) -> float:
    """Euclidean scalar product, ``Re(a * conj(b))``."""
    return a.alpha * b.alpha + a.beta * b.beta + a.gamma * b.gamma + a.delta * b.delta


def lorentzian_form(a: Quaternion, b: Quaternion) -> float:
    """``Re(a * b)``: the (+,-,-,-) bilinear form."""
    return a.alpha * b.alpha - a.beta * b.beta - a.gamma * b.gamma - a.delta * b.delta


def inverse(q: Quaternion) -> Quaternion:
    n = norm_sq(q)
    if n == 0:
        raise ZeroQuaternion("the zero quaternion has no inverse")
    return Quaternion(q.alpha / n, -q.beta / n, -q.gamma / n, -q.delta / n)


def commute_check(a: Quaternion, b: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    """True when ``ab == ba``, i.e. the vector parts are collinear."""
    u, w = a.vector, b.vector
    return u.cross(w).norm() <= tol * max(1.0, u.norm() * w.norm())


def is_unit(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return abs(norm_sq(q) - 1.0) <= tol


def require_unit(q: Quaternion, tol: float = DEFAULT_TOL) -> Quaternion:
    if not is_unit(q, tol):
        raise NotUnit(f"|q|^2 = {norm_sq(q)!r} is not 1 within {tol}")
    return q


def quat_exp(w: Quaternion, tol: float = DEFAULT_TOL) -> Quaternion:
    """Exponential of a purely imaginary quaternion.

    ``exp(t n) = cos(t) e + sin(t) n`` for a unit imaginary ``n``; the
    result always has unit norm.
    """
    if abs(w.alpha) > tol:
        raise NotImaginary(f"scalar part {w.alpha!r} is not zero")
    theta = w.vector.norm()
    if theta == 0:
        return Quaternion(1.0, 0.0, 0.0, 0.0)
    s = math.sin(theta) / theta
    return Quaternion(math.cos(theta), w.beta * s, w.gamma * s, w.delta * s)


def quat_log(q: Quaternion, tol: float = DEFAULT_TOL) -> Quaternion:
    """Principal logarithm of a unit quaternion.

    The returned imaginary quaternion has length in ``[0, pi]``. At ``-e`` the
    axis is undefined and ``i`` is used.
    """
    require_unit(q, tol)
    v = q.vector
    s = v.norm()
    if s == 0:
        if q.alpha > 0:
            return Quaternion(0.0, 0.0, 0.0, 0.0)
        return Quaternion(0.0, math.pi, 0.0, 0.0)
    theta = math.atan2(s, q.alpha)
    f = theta / s
    return Quaternion(0.0, v.x * f, v.y * f, v.z * f)


def two_square_identity_check(x, y, u, v) -> tuple:
    lhs = (x * x + y * y) * (u * u + v * v)
    rhs = (x * u - y * v) ** 2 + (x * v + y * u) ** 2
    return lhs, rhs


def four_square_identity_check(a: Quaternion, b: Quaternion) -> tuple:
    """Euler's four-square identity for the components of ``a`` and ``b``.

    Returns ``(lhs, rhs, terms)`` where ``terms`` are the four bilinear forms
    whose squares sum to ``rhs``. They coincide with the components of
    ``a * b`` but are written out here without calling :func:`quat_mul`.
    """
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    terms = (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )
    lhs = (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3) * (b0 * b0 + b1 * b1 + b2 * b2 + b3 * b3)
    rhs = sum(t * t for t in terms)
    return lhs, rhs, terms


def is_root_of_q2_plus_1(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``q*q + e == 0``; the roots form the unit sphere of imaginaries."""
    return abs(quat_mul(q, q) + E) <= tol


# -- the quaternion group {+-e, +-i, +-j, +-k} --------------------------------

# index products of the basis (0=e, 1=i, 2=j, 3=k): (sign, index)
_BASIS_PRODUCT = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}

_BASIS = (E, I, J, K)


class QuaternionGroupElement(enum.Enum):
    """Element of the order-8 quaternion group, valued as (sign, basis index)."""

    PLUS_E = (1, 0)
    MINUS_E = (-1, 0)
    PLUS_I = (1, 1)
    MINUS_I = (-1, 1)
    PLUS_J = (1, 2)
    MINUS_J = (-1, 2)
    PLUS_K = (1, 3)
    MINUS_K = (-1, 3)

    @property
    def sign(self) -> int:
        return self.value[0]

    @property
    def index(self) -> int:
        return self.value[1]

    @property
    def symbol(self) -> str:
        return ("+" if self.sign > 0 else "-") + "eijk"[self.index]

    @classmethod
    def from_symbol(cls, s: str) -> QuaternionGroupElement:
        if len(s) == 1:
            s = "+" + s
        return cls((1 if s[0] == "+" else -1, "eijk".index(s[1])))

    def to_quaternion(self) -> Quaternion:
        return _BASIS[self.index] * self.sign

    def __mul__(self, other):
        if isinstance(other, QuaternionGroupElement):
            return group_mul(self, other)
        if isinstance(other, Quaternion):
            return group_left_action(self, other)
        return NotImplemented

    def __neg__(self) -> QuaternionGroupElement:
        return QuaternionGroupElement((-self.sign, self.index))

    def __repr__(self):
        return f"<{self.symbol}>"

    # members are singletons; identity hashing keeps table lookups cheap
    __hash__ = object.__hash__


def _group_product(g: QuaternionGroupElement, h: QuaternionGroupElement) -> QuaternionGroupElement:
    sign, idx = _BASIS_PRODUCT[g.index, h.index]
    return QuaternionGroupElement((g.sign * h.sign * sign, idx))


_GROUP_TABLE = {(g, h): _group_product(g, h) for g in QuaternionGroupElement for h in QuaternionGroupElement}


def group_mul(g: QuaternionGroupElement, h: QuaternionGroupElement) -> QuaternionGroupElement:
    return _GROUP_TABLE[g, h]


def group_left_action(g: QuaternionGroupElement, q: Quaternion) -> Quaternion:
    return quat_mul(g.to_quaternion(), q)
