"""Monte Carlo volume of the prefix-sum polytope against (2n-1)!!/n!.

    python scripts/volume_sweep.py --max-n 8 --samples 2000000 --seed 1
"""
import argparse
from dataclasses import dataclass

from wellpath.polytope import mc_estimate


@dataclass
class Config:
    max_n: int = 6
    samples: int = 1_000_000
    seed: int = 0


def main(cfg: Config):
    print(" n     estimate    std_err       exact      z")
    for n in range(1, cfg.max_n + 1):
        est = mc_estimate(n, cfg.samples, cfg.seed + n)
        print(f"{n:2d} {est.estimate:12.5f} {est.std_error:10.5f} "
              f"{float(est.exact):11.5f} {est.z_score:+6.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    main(Config(a.max_n, a.samples, a.seed))
