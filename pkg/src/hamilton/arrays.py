"""Vectorised kernels over stacks of quaternions.

Quaternions are arrays with a trailing axis of length 4 in (alpha, beta,
gamma, delta) order; vectors have a trailing axis of length 3. Integer
dtypes are preserved, so products of integer stacks are exact.
"""

import numpy as np


def qmul(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack([
        a0 * b0 - (a1 * b1 + a2 * b2 + a3 * b3),
        a0 * b1 + b0 * a1 + (a2 * b3 - a3 * b2),
        a0 * b2 + b0 * a2 + (a3 * b1 - a1 * b3),
        a0 * b3 + b0 * a3 + (a1 * b2 - a2 * b1),
    ], axis=-1)


def qconj(q):
    q = np.array(q, copy=True)
    q[..., 1:] *= -1
    return q


def qnorm_sq(q):
    q = np.asarray(q)
    return np.sum(q * q, axis=-1)


def qinv(q):
    q = np.asarray(q, dtype=float)
    return qconj(q) / qnorm_sq(q)[..., None]


def random_unit(rng, size):
    """Uniform samples on S^3 by normalising 4D Gaussians."""
    g = rng.standard_normal((size, 4))
    return g / np.linalg.norm(g, axis=-1, keepdims=True)


def random_axes(rng, size):
    g = rng.standard_normal((size, 3))
    return g / np.linalg.norm(g, axis=-1, keepdims=True)


def embed(v):
    v = np.asarray(v)
    out = np.zeros(v.shape[:-1] + (4,), dtype=v.dtype)
    out[..., 1:] = v
    return out


def conjugate_action(q, v):
    """``q (0, v) q^-1`` for stacks of quaternions and 3-vectors; returns the full quaternion."""
    return qmul(qmul(q, embed(v)), qinv(q))


def rotate(q, v):
    return conjugate_action(q, v)[..., 1:]


def rotation_matrices(q):
    """``(a^2 - |u|^2) I + 2a [u]_x + 2 u u^T`` for each quaternion."""
    q = np.asarray(q, dtype=float)
    a = q[..., 0]
    u = q[..., 1:]
    uu = np.sum(u * u, axis=-1)
    R = 2.0 * u[..., :, None] * u[..., None, :]
    diag = a * a - uu
    for n in range(3):
        R[..., n, n] += diag
    x, y, z = u[..., 0], u[..., 1], u[..., 2]
    R[..., 0, 1] -= 2 * a * z
    R[..., 1, 0] += 2 * a * z
    R[..., 0, 2] += 2 * a * y
    R[..., 2, 0] -= 2 * a * y
    R[..., 1, 2] -= 2 * a * x
    R[..., 2, 1] += 2 * a * x
    return R


def apply_matrices(R, v):
    return np.einsum("...ij,...j->...i", R, v)


def rodrigues(axis, angle, v):
    axis = np.asarray(axis, dtype=float)
    v = np.asarray(v, dtype=float)
    c = np.cos(angle)[..., None]
    s = np.sin(angle)[..., None]
    nv = np.sum(axis * v, axis=-1, keepdims=True)
    return c * v + s * np.cross(axis, v) + (1.0 - c) * nv * axis


def axis_angle_to_quat(axis, angle):
    axis = np.asarray(axis, dtype=float)
    half = 0.5 * np.asarray(angle, dtype=float)
    return np.concatenate([np.cos(half)[..., None], np.sin(half)[..., None] * axis], axis=-1)


def quat_to_matrix(q):
    """Stack of 2x2 complex matrices ``[[z, conj(w)], [-w, conj(z)]]``."""
    q = np.asarray(q)
    z = q[..., 0] + 1j * q[..., 1]
    wbar = q[..., 2] + 1j * q[..., 3]
    m = np.empty(q.shape[:-1] + (2, 2), dtype=complex)
    m[..., 0, 0] = z
    m[..., 0, 1] = wbar
    m[..., 1, 0] = -np.conj(wbar)
    m[..., 1, 1] = np.conj(z)
    return m


def det2(m):
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def so4_matrices(ql, qr):
    """4x4 matrices of ``v -> ql v qr``; column ``n`` is the image of basis ``n``."""
    ql = np.asarray(ql, dtype=float)
    qr = np.asarray(qr, dtype=float)
    basis = np.eye(4)
    cols = [qmul(qmul(ql, b), qr) for b in basis]
    return np.stack(cols, axis=-1)
