"""JSON and CSV encodings for quaternions, matrices and point clouds.

Numbers are written with 17 significant digits by default, enough for an
exact float round trip.
"""

import json

import numpy as np

from .core import Quaternion
from .rotations import AxisAngle

DIGITS = 17


def fmt(x: float, digits: int = DIGITS) -> str:
    # + 0.0 turns -0.0 into 0.0
    return format(float(x) + 0.0, f".{digits}g")


def csv_row(values, digits: int = DIGITS) -> str:
    return ",".join(fmt(v, digits) for v in values)


def parse_csv_row(line: str) -> list[float]:
    return [float(t) for t in line.strip().split(",")]


def quaternion_to_json(q: Quaternion) -> str:
    return json.dumps([float(c) for c in q])


def quaternion_from_json(s: str) -> Quaternion:
    values = json.loads(s)
    if len(values) != 4:
        raise ValueError(f"a quaternion needs 4 components, got {len(values)}")
    return Quaternion(*(float(v) for v in values))


def quaternion_to_csv(q: Quaternion, digits: int = DIGITS) -> str:
    return csv_row(q, digits)


def quaternion_from_csv(line: str) -> Quaternion:
    values = parse_csv_row(line)
    if len(values) != 4:
        raise ValueError(f"a quaternion needs 4 components, got {len(values)}")
    return Quaternion(*values)


def complex_matrix_to_json(m) -> str:
    m = np.asarray(m, dtype=complex)
    return json.dumps([[[float(z.real), float(z.imag)] for z in row] for row in m])


def complex_matrix_from_json(s: str) -> np.ndarray:
    data = json.loads(s)
    return np.array([[complex(re, im) for re, im in row] for row in data], dtype=complex)


def axis_angle_to_json(aa: AxisAngle) -> str:
    return json.dumps(aa.to_dict())


def axis_angle_from_json(s: str) -> AxisAngle:
    return AxisAngle.from_dict(json.loads(s))


def rotation_matrix_to_json(R) -> str:
    return json.dumps([float(x) for x in np.asarray(R, dtype=float).ravel()])


def rotation_matrix_from_json(s: str) -> np.ndarray:
    values = json.loads(s)
    if len(values) != 9:
        raise ValueError(f"a 3x3 matrix needs 9 entries, got {len(values)}")
    return np.array(values, dtype=float).reshape(3, 3)


def write_point_cloud_csv(stream, points, columns, meta: dict | None = None, digits: int = DIGITS):
    """One ``#`` metadata line (if ``meta``), a header row, then one point per line."""
    if meta:
        stream.write("# " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n")
    stream.write(",".join(columns) + "\n")
    for p in points:
        stream.write(csv_row(p, digits) + "\n")


def read_point_cloud_csv(stream) -> tuple[dict, list[str], np.ndarray]:
    meta, header, rows = {}, None, []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for item in line[1:].split():
                k, _, v = item.partition("=")
                meta[k] = v
        elif header is None:
            header = line.split(",")
        else:
            rows.append(parse_csv_row(line))
    return meta, header, np.array(rows, dtype=float)


def point_cloud_to_json(points) -> str:
    return json.dumps([[float(x) for x in p] for p in points])
