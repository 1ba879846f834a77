"""Run every identity check over several seeds and tabulate the worst error.

    python scripts/verify_identities.py --trials 20000 --seeds 0 1 2 3
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from hamilton.checks import CHECKS


@dataclass
class Config:
    trials: int = 10_000
    seeds: list[int] = field(default_factory=lambda: [0, 1, 2])


def run(cfg: Config) -> bool:
    print(f"{'identity':<24}{'trials':>8}{'seeds':>7}{'max error':>14}{'tol':>10}{'secs':>8}  result")
    all_ok = True
    for name, fn in CHECKS.items():
        t0 = time.perf_counter()
        results = [fn(cfg.trials, seed) for seed in cfg.seeds]
        dt = time.perf_counter() - t0
        worst = max(r.max_error for r in results)
        ok = all(r.passed for r in results)
        all_ok &= ok
        print(f"{name:<24}{cfg.trials:>8}{len(cfg.seeds):>7}{worst:>14.3e}{results[0].tolerance:>10.0e}"
              f"{dt:>8.2f}  {'PASS' if ok else 'FAIL'}")
    return all_ok


def parse_args(argv=None) -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=Config.trials)
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    a = p.parse_args(argv)
    return Config(a.trials, a.seeds)


if __name__ == "__main__":
    sys.exit(0 if run(parse_args()) else 1)
