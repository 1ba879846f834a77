"""Command line interface.

Exit codes: 0 success or PASS, 1 a check failed, 2 usage error, 3 domain error
(zero axis, base point off its sphere, ...).

Values that start with a minus sign must be attached with ``=``, e.g.
``--vec=-1,0,0``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from contextlib import contextmanager

import numpy as np

from . import checks, hopf
from .bench import AGREEMENT_TOL, run_bench
from .core import Quaternion, Vector3, norm_sq
from .errors import QuaternionError
from .rotations import (
    AxisAngle,
    UnitQuaternion,
    axis_angle_to_quat,
    canonical,
    compose,
    conjugate_action,
    quat_to_axis_angle,
    rodrigues_rotate,
    rotation_matrix,
)
from .serialize import DIGITS, csv_row, fmt, write_point_cloud_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
AXIS_NOTE_TOL = 1e-6


class DomainError(Exception):
    pass


def _floats(n: int | None = None):
    def parse(text: str) -> list[float]:
        try:
            values = [float(t) for t in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
        if not all(math.isfinite(v) for v in values):
            raise argparse.ArgumentTypeError(f"non-finite value in {text!r}")
        if n is not None and len(values) != n:
            raise argparse.ArgumentTypeError(f"expected {n} numbers, got {len(values)} in {text!r}")
        return values
    return parse


def _rotation_spec(text: str) -> UnitQuaternion:
    """``aa:x,y,z,angle`` (axis normalised) or ``q:a,b,c,d`` (normalised)."""
    kind, sep, body = text.partition(":")
    if not sep or kind not in ("aa", "q"):
        raise argparse.ArgumentTypeError(f"rotation spec must be aa:x,y,z,angle or q:a,b,c,d, got {text!r}")
    values = _floats(4)(body)
    if kind == "aa":
        axis = np.array(values[:3])
        norm = float(np.linalg.norm(axis))
        if norm == 0:
            raise argparse.ArgumentTypeError(f"zero axis in {text!r}")
        return axis_angle_to_quat(AxisAngle(Vector3(*(axis / norm)), values[3]))
    q = Quaternion(*values)
    if norm_sq(q) == 0:
        raise argparse.ArgumentTypeError(f"zero quaternion in {text!r}")
    return UnitQuaternion.normalize(q)


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _read_vectors(path: str) -> list[list[float]]:
    rows = []
    with open(path) as fh:
        for n, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rows.append(_floats(3)(line))
            except argparse.ArgumentTypeError as exc:
                raise argparse.ArgumentTypeError(f"{path}:{n}: {exc}")
    return rows


def _emit_rows(out, rows, fmt_name: str, digits: int):
    if fmt_name == "json":
        out.write(json.dumps([[float(x) + 0.0 for x in r] for r in rows]) + "\n")
    else:
        for r in rows:
            out.write(csv_row(r, digits) + "\n")


# -- subcommands --------------------------------------------------------------

def cmd_rotate(args) -> int:
    axis = np.asarray(args.axis, dtype=float)
    norm = float(np.linalg.norm(axis))
    if norm == 0:
        raise DomainError("axis must be nonzero")
    if abs(norm - 1.0) > AXIS_NOTE_TOL:
        print(f"note: axis normalised from length {norm:.17g}", file=sys.stderr)
    aa = AxisAngle(Vector3(*(axis / norm)), args.angle)

    vectors = list(args.vec or [])
    if args.file:
        vectors.extend(_read_vectors(args.file))
    if not vectors:
        raise argparse.ArgumentTypeError("no vectors given (use --vec or --file)")

    if args.method == "rodrigues":
        rotated = [tuple(rodrigues_rotate(aa, Vector3(*v))) for v in vectors]
    else:
        q = axis_angle_to_quat(aa)
        rotated = [tuple(conjugate_action(q, Vector3(*v))) for v in vectors]
    with _output(args.out) as out:
        _emit_rows(out, rotated, args.format, args.digits)
    return EXIT_OK


def cmd_compose(args) -> int:
    # first listed acts first: result = q_n ... q_2 q_1
    q = args.specs[0]
    for nxt in args.specs[1:]:
        q = compose(nxt, q)
    q = canonical(q)
    aa = quat_to_axis_angle(q)
    R = rotation_matrix(q)
    d = args.digits
    with _output(args.out) as out:
        if args.format == "json":
            out.write(json.dumps({
                "quaternion": [float(c) + 0.0 for c in q],
                "axis_angle": {"axis": [float(c) + 0.0 for c in aa.axis], "angle_rad": aa.angle},
                "matrix": [float(x) + 0.0 for x in R.ravel()],
            }) + "\n")
        else:
            out.write("quaternion," + csv_row(q, d) + "\n")
            out.write("axis," + csv_row(aa.axis, d) + "\n")
            out.write("angle_rad," + fmt(aa.angle, d) + "\n")
            out.write("matrix," + csv_row(R.ravel(), d) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    if args.trials < 1:
        raise argparse.ArgumentTypeError("--trials must be >= 1")
    res = checks.CHECKS[args.identity](args.trials, args.seed)
    d = args.digits
    print(f"identity: {res.name}")
    print(f"trials: {res.trials}")
    print(f"seed: {args.seed}")
    print(f"max_error: {fmt(res.max_error, d)}")
    print(f"tolerance: {fmt(res.tolerance, d)}")
    print(f"result: {'PASS' if res.passed else 'FAIL'}")
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_hopf(args) -> int:
    which = args.which
    dim = hopf.BASE_DIM[which]
    if len(args.base) != dim:
        raise argparse.ArgumentTypeError(f"--base for {which} needs {dim} coordinates")
    if args.project and which != "complex":
        raise argparse.ArgumentTypeError("--project is only available for the complex fibration")
    if args.n < 1:
        raise argparse.ArgumentTypeError("-n must be >= 1")
    base = np.asarray(args.base, dtype=float)
    if not hopf.on_sphere(base):
        raise DomainError(f"base point {args.base} is not on S^{dim - 1}")

    pts = hopf.fiber_sample(base, args.n, which, rng=np.random.default_rng(args.seed))
    if not np.all(hopf.fiber_contains(pts, base, which)):
        raise DomainError("fibre sample failed verification")
    if args.project:
        pts = hopf.stereographic_project(pts)
        columns = ["x", "y", "z"]
    else:
        columns = [f"x{n + 1}" for n in range(pts.shape[1])]

    meta = {"which": which, "base": ",".join(fmt(b, args.digits) for b in base),
            "seed": args.seed, "projected": int(args.project)}
    with _output(args.out) as out:
        if args.format == "json":
            _emit_rows(out, pts, "json", args.digits)
        else:
            write_point_cloud_csv(out, pts, columns, meta, args.digits)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.n < 1 or args.repeats < 1:
        raise argparse.ArgumentTypeError("-n and -r must be >= 1")
    result = run_bench(args.n, args.repeats, args.seed)
    d = args.digits
    with _output(args.out) as out:
        if args.format == "json":
            out.write(json.dumps(result.to_dict()) + "\n")
        else:
            out.write(f"# n_vectors={args.n} n_repeats={args.repeats} seed={args.seed}\n")
            out.write("method,iterations,total_seconds,ns_per_op,relative_throughput,checksum\n")
            for r in result.rows:
                out.write(",".join([r.method, str(r.iterations), fmt(r.total_seconds, d),
                                    fmt(r.ns_per_op, d), fmt(r.relative_throughput, d),
                                    fmt(r.checksum, d)]) + "\n")
            verdict = "PASS" if result.agreement_ok else "FAIL"
            out.write(f"# agreement max_deviation={fmt(result.agreement_max_dev, d)} "
                      f"tolerance={fmt(AGREEMENT_TOL, d)} result={verdict}\n")
    return EXIT_OK if result.agreement_ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamilton", description="Quaternion rotations, identities and Hopf fibres.")
    sub = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("csv", "json"), default="csv")
    output.add_argument("--digits", type=int, default=DIGITS)
    output.add_argument("--out", metavar="PATH")

    p = sub.add_parser("rotate", parents=[output], help="rotate vectors about an axis")
    p.add_argument("--axis", type=_floats(3), required=True, metavar="X,Y,Z")
    p.add_argument("--angle", type=float, required=True, help="radians")
    p.add_argument("--vec", type=_floats(3), action="append", metavar="X,Y,Z")
    p.add_argument("--file", metavar="PATH", help="CSV file, one vector per row")
    p.add_argument("--method", choices=("quat", "rodrigues"), default="quat")
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("compose", parents=[output], help="compose rotations, first listed acts first")
    p.add_argument("specs", type=_rotation_spec, nargs="+", metavar="SPEC",
                   help="aa:x,y,z,angle or q:a,b,c,d")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check", help="run a seeded identity check")
    p.add_argument("identity", choices=sorted(checks.CHECKS))
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--digits", type=int, default=DIGITS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hopf", parents=[output], help="emit points of a Hopf fibre")
    p.add_argument("which", choices=("real", "complex", "quaternionic"))
    p.add_argument("--base", type=_floats(), required=True, metavar="COORDS")
    p.add_argument("-n", type=int, default=64)
    p.add_argument("--project", action="store_true", help="stereographic projection to R^3 (complex only)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("bench", parents=[output], help="time quaternion vs matrix vs Rodrigues rotation")
    p.add_argument("-n", type=int, default=1_000_000, help="number of vectors")
    p.add_argument("-r", "--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"hamilton: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, QuaternionError) as exc:
        print(f"hamilton: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"hamilton: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
