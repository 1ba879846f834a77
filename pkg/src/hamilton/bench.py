"""Timing of three ways to rotate a batch of vectors by one rotation.

* ``quaternion``: ``q (0, v) q^-1`` for every vector
* ``matrix``: build ``R(q)`` once, then ``R v`` for every vector
* ``rodrigues``: the closed-form axis-angle formula for every vector

Each method runs single threaded inside its timed region.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

import numpy as np

from . import arrays

AGREEMENT_TOL = 1e-9
AGREEMENT_SAMPLE = 1000


@dataclass
class BenchReport:
    method: str
    iterations: int
    total_seconds: float
    ns_per_op: float
    relative_throughput: float
    checksum: float

    def __post_init__(self):
        if self.iterations <= 0:
            raise ValueError("iterations must be positive")
        if self.total_seconds < 0 or self.ns_per_op < 0:
            raise ValueError("timings must be nonnegative")


@dataclass
class BenchResult:
    rows: list[BenchReport]
    agreement_max_dev: float
    agreement_ok: bool
    n_vectors: int
    n_repeats: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "n_vectors": self.n_vectors,
            "n_repeats": self.n_repeats,
            "seed": self.seed,
            "rows": [asdict(r) for r in self.rows],
            "agreement": {"max_deviation": self.agreement_max_dev,
                          "tolerance": AGREEMENT_TOL,
                          "pass": self.agreement_ok},
        }


def _quaternion_method(q, axis, angle, v):
    return arrays.rotate(q, v)


def _matrix_method(q, axis, angle, v):
    R = arrays.rotation_matrices(q)
    return v @ R.T


def _rodrigues_method(q, axis, angle, v):
    return arrays.rodrigues(axis, np.asarray(angle), v)


METHODS = {
    "quaternion": _quaternion_method,
    "matrix": _matrix_method,
    "rodrigues": _rodrigues_method,
}


def make_inputs(n_vectors: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    axis = arrays.random_axes(rng, 1)[0]
    angle = float(rng.uniform(0.0, np.pi))
    q = arrays.axis_angle_to_quat(axis, angle)
    v = rng.uniform(-1.0, 1.0, size=(n_vectors, 3))
    return q, axis, angle, v


def run_bench(n_vectors: int, n_repeats: int, seed: int = 0) -> BenchResult:
    if n_vectors < 1 or n_repeats < 1:
        raise ValueError("counts must be >= 1")
    q, axis, angle, v = make_inputs(n_vectors, seed)

    outputs, best = {}, {}
    for name, fn in METHODS.items():
        times = []
        for _ in range(n_repeats):
            t0 = time.perf_counter()
            out = fn(q, axis, angle, v)
            times.append(time.perf_counter() - t0)
        outputs[name] = out
        best[name] = min(times)

    m = min(n_vectors, AGREEMENT_SAMPLE)
    ref = outputs["quaternion"][:m]
    dev = max(float(np.max(np.abs(outputs[k][:m] - ref))) for k in METHODS)

    rows = []
    for name in METHODS:
        total = best[name]
        rows.append(BenchReport(
            method=name,
            iterations=n_vectors,
            total_seconds=total,
            ns_per_op=total * 1e9 / n_vectors,
            relative_throughput=(best["matrix"] / total) if total > 0 else float("inf"),
            checksum=float(np.sum(outputs[name])),
        ))
    return BenchResult(rows, dev, dev <= AGREEMENT_TOL, n_vectors, n_repeats, seed)
