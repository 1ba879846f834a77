"""Export stereographically projected Hopf circles and measure how they link.

Base points are taken on a few circles of latitude of S^2. Each base point's
fiber in S^3 is sampled, projected to R^3 and written to one CSV with a
``fiber`` column, ready for any 3D scatter/line plotter. The pairwise Gauss
linking integral of the projected curves is then estimated; distinct Hopf
fibers link exactly once, so every estimate should round to +-1.

    python scripts/export_hopf_fibers.py --out fibers.csv --latitudes -0.6 0 0.6 --per-ring 6
"""

import argparse
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from hamilton import fiber_sample, stereographic_project
from hamilton.serialize import write_point_cloud_csv


@dataclass
class Config:
    out: str = "hopf_fibers.csv"
    latitudes: list[float] = field(default_factory=lambda: [-0.6, 0.0, 0.6])
    per_ring: int = 6
    samples: int = 256


def base_points(cfg: Config) -> np.ndarray:
    pts = []
    for z in cfg.latitudes:
        r = math.sqrt(1 - z * z)
        for k in range(cfg.per_ring):
            t = 2 * math.pi * k / cfg.per_ring
            pts.append((r * math.cos(t), r * math.sin(t), z))
    return np.array(pts)


def linking_number(c1: np.ndarray, c2: np.ndarray) -> float:
    """Midpoint-rule Gauss double integral for two closed polygons."""
    d1 = np.roll(c1, -1, axis=0) - c1
    d2 = np.roll(c2, -1, axis=0) - c2
    m1 = c1 + 0.5 * d1
    m2 = c2 + 0.5 * d2
    r = m1[:, None, :] - m2[None, :, :]
    cross = np.cross(d1[:, None, :], d2[None, :, :])
    integrand = np.sum(r * cross, axis=-1) / np.linalg.norm(r, axis=-1) ** 3
    return float(np.sum(integrand) / (4 * math.pi))


def run(cfg: Config) -> list[float]:
    bases = base_points(cfg)
    curves = [stereographic_project(fiber_sample(b, cfg.samples, "complex")) for b in bases]

    rows = [(i, *p) for i, c in enumerate(curves) for p in c]
    with open(cfg.out, "w") as fh:
        meta = {"fibers": len(curves), "samples": cfg.samples,
                "latitudes": ",".join(map(str, cfg.latitudes)), "per_ring": cfg.per_ring}
        write_point_cloud_csv(fh, rows, ["fiber", "x", "y", "z"], meta)

    links = [linking_number(curves[i], curves[j]) for i, j in itertools.combinations(range(len(curves)), 2)]
    worst = max(abs(abs(x) - 1) for x in links)
    print(f"wrote {len(curves)} fibers x {cfg.samples} points to {cfg.out}")
    print(f"pairwise linking numbers: {len(links)} pairs, "
          f"rounded values {sorted(set(round(x) for x in links))}, max ||Lk| - 1| = {worst:.2e}")
    return links


def parse_args(argv=None) -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default=Config.out)
    p.add_argument("--latitudes", type=float, nargs="+", default=[-0.6, 0.0, 0.6])
    p.add_argument("--per-ring", type=int, default=Config.per_ring)
    p.add_argument("--samples", type=int, default=Config.samples)
    a = p.parse_args(argv)
    return Config(a.out, a.latitudes, a.per_ring, a.samples)


if __name__ == "__main__":
    run(parse_args())
