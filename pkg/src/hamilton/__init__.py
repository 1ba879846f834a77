"""Hamilton's quaternions: algebra, 2x2 matrix forms, rotations and Hopf maps."""

from .core import (
    DEFAULT_TOL,
    E,
    I,
    J,
    K,
    ZERO,
    Quaternion,
    QuaternionGroupElement,
    Vector3,
    commute_check,
    conjugate,
    four_square_identity_check,
    group_left_action,
    group_mul,
    inner_product,
    inverse,
    is_root_of_q2_plus_1,
    lorentzian_form,
    norm_sq,
    quat_add,
    quat_exp,
    quat_log,
    quat_mul,
    scalar_part,
    two_square_identity_check,
    vector_part,
)
from .errors import (
    AtPole,
    BadAxis,
    BadCount,
    BadIndex,
    BadParameter,
    NotImaginary,
    NotInImage,
    NotOnSphere,
    NotSmall,
    NotUnit,
    QuaternionError,
    ZeroPair,
    ZeroQuaternion,
)
from .matrix_rep import complex_to_matrix, is_special_unitary, matrix_to_quat, pauli, quat_to_matrix
from .rotations import (
    AxisAngle,
    UnitQuaternion,
    axis_angle_to_quat,
    compose,
    conjugate_action,
    infinitesimal_rotate,
    quat_to_axis_angle,
    rodrigues_rotate,
    rotation_matrix,
    slerp,
    so4_action,
    so4_matrix,
)
from .hopf import (
    ProjectiveLinePoint,
    fiber_contains,
    fiber_sample,
    hopf_complex,
    hopf_quaternionic,
    hopf_real,
    projectivize,
    stereographic_project,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "E",
    "I",
    "J",
    "K",
    "ZERO",
    "Quaternion",
    "QuaternionGroupElement",
    "Vector3",
    "commute_check",
    "conjugate",
    "four_square_identity_check",
    "group_left_action",
    "group_mul",
    "inner_product",
    "inverse",
    "is_root_of_q2_plus_1",
    "lorentzian_form",
    "norm_sq",
    "quat_add",
    "quat_exp",
    "quat_log",
    "quat_mul",
    "scalar_part",
    "two_square_identity_check",
    "vector_part",
    "AtPole",
    "BadAxis",
    "BadCount",
    "BadIndex",
    "BadParameter",
    "NotImaginary",
    "NotInImage",
    "NotOnSphere",
    "NotSmall",
    "NotUnit",
    "QuaternionError",
    "ZeroPair",
    "ZeroQuaternion",
    "AxisAngle",
    "UnitQuaternion",
    "axis_angle_to_quat",
    "compose",
    "conjugate_action",
    "infinitesimal_rotate",
    "quat_to_axis_angle",
    "rodrigues_rotate",
    "rotation_matrix",
    "slerp",
    "so4_action",
    "so4_matrix",
    "ProjectiveLinePoint",
    "fiber_contains",
    "fiber_sample",
    "hopf_complex",
    "hopf_quaternionic",
    "hopf_real",
    "projectivize",
    "stereographic_project",
    "complex_to_matrix",
    "is_special_unitary",
    "matrix_to_quat",
    "pauli",
    "quat_to_matrix",
]
