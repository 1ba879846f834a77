"""Seeded numerical checks of the algebraic identities.

Each check returns a :class:`CheckResult` holding the largest error seen and
the tolerance it is judged against. Integer identities use exact Python ints
and a tolerance of zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import arrays
from .core import QuaternionGroupElement, Quaternion, four_square_identity_check, group_mul, quat_mul, two_square_identity_check

INT_RANGE = 1000


@dataclass(frozen=True)
class CheckResult:
    name: str
    trials: int
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


def law_of_moduli(trials: int, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    a = rng.uniform(-10, 10, (trials, 4))
    b = rng.uniform(-10, 10, (trials, 4))
    expected = arrays.qnorm_sq(a) * arrays.qnorm_sq(b)
    got = arrays.qnorm_sq(arrays.qmul(a, b))
    err = float(np.max(np.abs(got - expected) / expected))
    return CheckResult("law-of-moduli", trials, err, 1e-9)


def _int_rows(rng, trials, width):
    return rng.integers(-INT_RANGE, INT_RANGE + 1, (trials, width)).tolist()


def four_square(trials: int, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    err = 0
    for row in _int_rows(rng, trials, 8):
        lhs, rhs, _ = four_square_identity_check(Quaternion(*row[:4]), Quaternion(*row[4:]))
        err = max(err, abs(lhs - rhs))
    return CheckResult("four-square", trials, err, 0)


def two_square(trials: int, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    err = 0
    for x, y, u, v in _int_rows(rng, trials, 4):
        lhs, rhs = two_square_identity_check(x, y, u, v)
        err = max(err, abs(lhs - rhs))
    return CheckResult("two-square", trials, err, 0)


def group_table(trials: int = 1, seed: int = 0) -> CheckResult:
    """Exhaustive; ``trials`` and ``seed`` are accepted for a uniform signature.

    The error counts table entries disagreeing with the Hamilton product plus
    non-associative triples.
    """
    elems = list(QuaternionGroupElement)
    failures = 0
    for g, h in itertools.product(elems, repeat=2):
        if group_mul(g, h).to_quaternion() != quat_mul(g.to_quaternion(), h.to_quaternion()):
            failures += 1
    for g, h, k in itertools.product(elems, repeat=3):
        if group_mul(group_mul(g, h), k) is not group_mul(g, group_mul(h, k)):
            failures += 1
    return CheckResult("group-table", trials, failures, 0)


def double_cover(trials: int, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    q = arrays.random_unit(rng, trials)
    diff = arrays.rotation_matrices(q) - arrays.rotation_matrices(-q)
    return CheckResult("double-cover", trials, float(np.max(np.abs(diff))), 1e-12)


def rodrigues_equivalence(trials: int, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    axis = arrays.random_axes(rng, trials)
    angle = rng.uniform(-np.pi, np.pi, trials)
    v = rng.uniform(-1, 1, (trials, 3))
    via_quat = arrays.rotate(arrays.axis_angle_to_quat(axis, angle), v)
    via_rodrigues = arrays.rodrigues(axis, angle, v)
    return CheckResult("rodrigues-equivalence", trials, float(np.max(np.abs(via_quat - via_rodrigues))), 1e-9)


CHECKS = {
    "law-of-moduli": law_of_moduli,
    "four-square": four_square,
    "two-square": two_square,
    "group-table": group_table,
    "double-cover": double_cover,
    "rodrigues-equivalence": rodrigues_equivalence,
}
