"""Complex numbers as real 2x2 matrices and quaternions as complex 2x2 matrices.

The quaternion representation sends ``e, i, j, k`` to ``I, i*s3, i*s2, i*s1``.
Other choices exist; they differ from this one by a fixed conjugation.
"""

import numpy as np

from .core import DEFAULT_TOL, Quaternion
from .errors import BadIndex, NotInImage

I2 = np.eye(2, dtype=complex)

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)

for _m in (I2, SIGMA1, SIGMA2, SIGMA3):
    _m.flags.writeable = False


def pauli(n: int) -> np.ndarray:
    if n not in (1, 2, 3):
        raise BadIndex(f"Pauli index must be 1, 2 or 3, got {n!r}")
    return (SIGMA1, SIGMA2, SIGMA3)[n - 1].copy()


def complex_to_matrix(x: float, y: float) -> np.ndarray:
    """``x + y i -> x I - y (i s2) = [[x, -y], [y, x]]``."""
    return np.array([[x, -y], [y, x]], dtype=float)


def quat_to_matrix(q: Quaternion) -> np.ndarray:
    z = complex(q.alpha, q.beta)
    wbar = complex(q.gamma, q.delta)
    return np.array([[z, wbar], [-wbar.conjugate(), z.conjugate()]], dtype=complex)


def matrix_to_quat(m, tol: float = DEFAULT_TOL) -> Quaternion:
    """Left inverse of :func:`quat_to_matrix` on its image.

    Raises NotInImage unless ``m`` has the shape ``[[z, conj(w)], [-w, conj(z)]]``
    up to ``tol`` (relative to the Frobenius norm of ``m``).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise NotInImage(f"expected a 2x2 matrix, got shape {m.shape}")
    z, wbar = m[0, 0], m[0, 1]
    defect = abs(m[1, 1] - np.conj(z)) ** 2 + abs(m[1, 0] + np.conj(wbar)) ** 2
    if np.sqrt(defect) > tol * max(1.0, np.linalg.norm(m)):
        raise NotInImage("matrix is not of the form [[z, conj(w)], [-w, conj(z)]]")
    return Quaternion(float(z.real), float(z.imag), float(wbar.real), float(wbar.imag))


def is_special_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m, dtype=complex)
    unitary_defect = np.linalg.norm(m @ m.conj().T - I2)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return bool(unitary_defect <= tol and abs(det - 1) <= tol)


def det(m) -> complex:
    m = np.asarray(m)
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
